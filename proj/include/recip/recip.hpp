#pragma once
// Umbrella header.

#include "recip/algebra/bipoly.hpp"
#include "recip/algebra/factor.hpp"
#include "recip/algebra/field.hpp"
#include "recip/algebra/poly.hpp"
#include "recip/algebra/rational_function.hpp"
#include "recip/cli/descriptors.hpp"
#include "recip/cli/parser.hpp"
#include "recip/curve/milnor.hpp"
#include "recip/curve/place.hpp"
#include "recip/curve/series.hpp"
#include "recip/curve/symbols.hpp"
#include "recip/reciprocity/checks.hpp"
#include "recip/surface/flag.hpp"
#include "recip/surface/parshin.hpp"
