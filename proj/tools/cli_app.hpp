#pragma once
// Command dispatch for the recip CLI: parses inputs, runs one symbol or check, renders the report.

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "recip/cli/descriptors.hpp"
#include "recip/recip.hpp"

namespace recip::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2, kModule = 3 };

struct CommandConfig {
  std::string field = "q";
  std::string command;
  std::optional<std::string> place;
  std::optional<std::string> flag;
  std::optional<std::string> curve;
  std::optional<std::string> point;
  int chart = 0;
  std::vector<std::string> args;
  std::string format = "json";
};

struct CommandResult {
  int exit_code = kSuccess;
  Json report;
  std::string text;
};

struct CommandInfo {
  std::size_t arity;
  std::string summary;
};

/// Subcommands with their number of function arguments.
inline const std::map<std::string, CommandInfo>& commands() {
  static const std::map<std::string, CommandInfo> table = {
      {"divisor", {1, "divisor of f on P^1 (places with multiplicities)"}},
      {"degree", {1, "degree symbol [k(p):k] v_p(f) at --place"}},
      {"tame", {2, "tame symbol (f, g)_p at --place"}},
      {"residue", {2, "Res_p(f dg) at --place"}},
      {"eps-pairing", {2, "1 - eps1*eps2*Res_p(f dg) in k[eps1,eps2] at --place"}},
      {"eps3-pairing", {2, "1 - eps^2*Res_p(f dg) in k[eps]/(eps^3) at --place"}},
      {"parshin", {3, "Parshin symbol (f1, f2, f3) at --flag (functions of x, y)"}},
      {"check-degree", {1, "sum of degree symbols over all places is 0"}},
      {"check-weil", {2, "product of tame symbols over all places is 1"}},
      {"check-residue", {2, "sum of Res_p(f dg) over all places is 0"}},
      {"check-parshin-points", {3, "product of Parshin symbols over the points of --curve is 1"}},
      {"check-parshin-curves", {3, "product of Parshin symbols over the curves through --point is 1"}},
  };
  return table;
}

namespace detail {

inline Json base_report(const CommandConfig& cfg, const FieldSpec& fs) {
  Json j;
  j["command"] = cfg.command;
  j["field"] = fs.canonical;
  j["modulus"] = fs.modulus ? Json(*fs.modulus) : Json(nullptr);
  j["inputs"] = cfg.args;
  return j;
}

inline Json symbol_json(Json j, const SymbolValue& s) {
  j["symbol"] = s.symbol;
  j["place"] = s.place;
  j["value"] = s.value.to_string();
  j["formula"] = s.formula;
  return j;
}

inline Json check_json(Json j, const ReciprocityReport& r) {
  j["law"] = r.law;
  j["fold"] = r.fold;
  Json local = Json::object();
  for (const auto& lv : r.local) local[lv.piece] = lv.value;
  j["local"] = local;
  j["aggregate"] = r.aggregate;
  j["pass"] = r.pass;
  Json spots = Json::array();
  for (const auto& sc : r.certificate.spot_checks) spots.push_back(Json{{"piece", sc.piece}, {"value", sc.value}});
  j["certificate"] = Json{{"support", r.certificate.support},
                          {"argument", r.certificate.argument},
                          {"spot_checks", spots},
                          {"spot_checks_trivial", r.certificate.spot_checks_trivial}};
  return j;
}

inline std::string field_line(const Json& j) {
  std::string s = j["field"].get<std::string>();
  if (!j["modulus"].is_null()) s += " (modulus " + j["modulus"].get<std::string>() + ")";
  return s;
}

inline std::string render_text(const Json& j) {
  std::ostringstream o;
  if (j.contains("error")) {
    const Json& e = j["error"];
    o << "error (" << e["kind"].get<std::string>() << "): " << e["message"].get<std::string>() << "\n";
    return o.str();
  }
  o << j["command"].get<std::string>() << " over " << field_line(j) << "\n";
  o << "  inputs: ";
  for (std::size_t i = 0; i < j["parsed"].size(); ++i) o << (i ? ", " : "") << j["parsed"][i].get<std::string>();
  o << "\n";
  if (j.contains("divisor")) {
    for (const auto& [k, v] : j["divisor"].items()) o << "  " << k << ": " << v.get<std::string>() << "\n";
    o << "  degree: " << j["degree"].get<std::string>() << "\n";
  } else if (j.contains("law")) {
    for (const auto& [k, v] : j["local"].items()) o << "  " << k << ": " << v.get<std::string>() << "\n";
    o << "  " << j["fold"].get<std::string>() << ": " << j["aggregate"].get<std::string>() << "\n";
    const Json& c = j["certificate"];
    o << "  certificate: " << c["spot_checks"].size() << " off-support spot checks, "
      << (c["spot_checks_trivial"].get<bool>() ? "all trivial" : "NOT all trivial") << "\n";
    o << "  " << (j["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  } else {
    o << "  at " << j["place"].get<std::string>() << ": " << j["value"].get<std::string>() << "\n";
    if (j.contains("residue")) o << "  residue: " << j["residue"].get<std::string>() << "\n";
  }
  return o.str();
}

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  if (dynamic_cast<const FactorizationError*>(&e)) return "FactorizationError";
  if (dynamic_cast<const UnsupportedError*>(&e)) return "UnsupportedError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const NonUnitError*>(&e)) return "NonUnitError";
  if (dynamic_cast<const ZeroFunctionError*>(&e)) return "ZeroFunctionError";
  if (dynamic_cast<const FieldMismatchError*>(&e)) return "FieldMismatchError";
  return "Error";
}

inline const std::string& require(const std::optional<std::string>& v, const std::string& opt,
                                  const std::string& cmd) {
  if (!v) throw UsageError(cmd + " needs " + opt);
  return *v;
}

inline Json run(const CommandConfig& cfg, int& exit_code) {
  const auto it = commands().find(cfg.command);
  if (it == commands().end()) throw UsageError("unknown command '" + cfg.command + "'");
  if (cfg.args.size() != it->second.arity) {
    throw UsageError(cfg.command + " takes " + std::to_string(it->second.arity) + " function argument(s), got " +
                     std::to_string(cfg.args.size()));
  }
  const FieldSpec fs = parse_field_spec(cfg.field);
  const std::string& cmd = cfg.command;
  if (fs.nil == 2 && cmd != "eps-pairing") throw UsageError("eps2(...) fields are only used by eps-pairing");
  if (fs.nil == 3 && cmd != "eps3-pairing") throw UsageError("eps3(...) fields are only used by eps3-pairing");
  const FieldPtr& k = fs.base;
  Json j = base_report(cfg, fs);
  exit_code = kSuccess;

  const bool two_vars = cmd == "parshin" || cmd == "check-parshin-points" || cmd == "check-parshin-curves";
  if (two_vars) {
    std::vector<RationalFunction2> f;
    for (const auto& a : cfg.args) f.push_back(parse_function2(a, k));
    Json parsed = Json::array();
    for (const auto& g : f) parsed.push_back(to_string(g));
    j["parsed"] = parsed;
    if (cmd == "parshin") {
      const Flag2D fl = parse_flag(require(cfg.flag, "--flag", cmd), k);
      const SymbolValue s = parshin_symbol(f[0], f[1], f[2], fl);
      j = symbol_json(j, s);
      Json digits = Json::array();
      for (const auto& g : f) {
        const ParshinDigits d = parshin_digits(g, fl);
        digits.push_back(Json{{"a1", d.a1}, {"a2", d.a2}, {"unit", d.unit.to_string()}});
      }
      j["digits"] = digits;
      return j;
    }
    ReciprocityReport r;
    if (cmd == "check-parshin-points") {
      const std::string& c = require(cfg.curve, "--curve", cmd);
      if (cfg.chart < 0 || cfg.chart > 3) throw UsageError("chart id must be 0, 1, 2 or 3");
      r = parshin_point_sum_check(f[0], f[1], f[2], parse_curve(c, k), cfg.chart);
    } else {
      const auto [alpha, beta] = parse_point(require(cfg.point, "--point", cmd), k);
      r = parshin_curve_sum_check(f[0], f[1], f[2], alpha, beta);
    }
    exit_code = r.pass ? kSuccess : kCheckFailed;
    return check_json(j, r);
  }

  std::vector<RationalFunction> f;
  for (const auto& a : cfg.args) f.push_back(parse_function(a, k));
  Json parsed = Json::array();
  for (const auto& g : f) parsed.push_back(to_string(g));
  j["parsed"] = parsed;

  if (cmd == "divisor") {
    const Divisor d = divisor(f[0]);
    Json terms = Json::object();
    for (const auto& [p, m] : d.terms) terms[p.label()] = std::to_string(m);
    j["divisor"] = terms;
    j["degree"] = std::to_string(d.degree());
    return j;
  }
  if (cmd == "check-degree" || cmd == "check-weil" || cmd == "check-residue") {
    const ReciprocityReport r = cmd == "check-degree"  ? degree_sum_check(f[0])
                                : cmd == "check-weil" ? weil_check(f[0], f[1])
                                                      : residue_sum_check(f[0], f[1]);
    exit_code = r.pass ? kSuccess : kCheckFailed;
    return check_json(j, r);
  }

  const Place p = parse_place(require(cfg.place, "--place", cmd), k);
  if (cmd == "degree") {
    return symbol_json(j, SymbolValue{Scalar::from_int(k, degree_symbol(f[0], p)), "degree", p.label(),
                                      {to_string(f[0])}, "[k(p):k] v_p(f)"});
  }
  if (cmd == "tame") return symbol_json(j, tame_symbol(f[0], f[1], p));
  if (cmd == "residue") {
    return symbol_json(j, SymbolValue{residue_fdg(f[0], f[1], p), "residue", p.label(),
                                      {to_string(f[0]), to_string(f[1])}, "Tr(coefficient of z^-1 in f dg/dz)"});
  }
  const SymbolValue s = cmd == "eps-pairing" ? residue_pairing(f[0], f[1], p) : eps3_pairing(f[0], f[1], p);
  j = symbol_json(j, s);
  j["residue"] = pairing_residue(s.value).to_string();
  return j;
}

}  // namespace detail

/// Runs one command; never throws for bad input, which is reported with exit code 2 or 3.
inline CommandResult run_command(const CommandConfig& cfg) {
  CommandResult out;
  try {
    out.report = detail::run(cfg, out.exit_code);
  } catch (const std::exception& e) {
    const std::string kind = detail::error_kind(e);
    const bool usage = kind == "ParseError" || kind == "UsageError";
    out.exit_code = usage ? kUsage : kModule;
    Json err{{"kind", kind}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    out.report = Json{{"command", cfg.command}, {"error", err}};
  }
  out.text = cfg.format == "text" ? detail::render_text(out.report) : out.report.dump(2) + "\n";
  return out;
}

}  // namespace recip::cli
