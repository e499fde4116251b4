#include <iostream>

#include "CLI11.hpp"
#include "cli_app.hpp"

int main(int argc, char** argv) {
  using namespace recip::cli;
  CLI::App app{"Local symbols and reciprocity checks on P^1 and P^1 x P^1 over exact fields"};
  app.require_subcommand(1);
  app.fallthrough();
  CommandConfig cfg;
  app.add_option("--field", cfg.field, "q | fp:<p> | fq:<p>^<d> | eps2(<base>) | eps3(<base>)")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  for (const auto& [name, info] : commands()) {
    CLI::App* sub = app.add_subcommand(name, info.summary);
    sub->add_option("functions", cfg.args, "function expressions (use -- before arguments starting with '-')")
        ->expected(static_cast<int>(info.arity));
    if (name == "degree" || name == "tame" || name == "residue" || name == "eps-pairing" || name == "eps3-pairing") {
      sub->add_option("--place", cfg.place, "monic irreducible polynomial in t, or inf")->required();
    }
    if (name == "parshin") {
      sub->add_option("--flag", cfg.flag, "curve=y-<s(x)>|x-<a>;point=<place>;chart=<0..3>")->required();
    }
    if (name == "check-parshin-points") {
      sub->add_option("--curve", cfg.curve, "y-<s(x)> or x-<a>")->required();
      sub->add_option("--chart", cfg.chart, "chart id 0..3")->check(CLI::Range(0, 3))->capture_default_str();
    }
    if (name == "check-parshin-curves") {
      sub->add_option("--point", cfg.point, "affine point alpha,beta")->required();
    }
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const CommandResult r = run_command(cfg);
  std::cout << r.text;
  return r.exit_code;
}
