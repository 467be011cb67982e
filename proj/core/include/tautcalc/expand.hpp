#pragma once

#include "tautcalc/generators.hpp"
#include "tautcalc/taut_class.hpp"

namespace tautcalc {

/// Strata form of a single generator on `space`. Loci enter as 1/|Aut| times the
/// pushforward from their graph, e.g. delta_irr is half the loop stratum.
TautClass symbol_class(MarkedSpace space, const Symbol& s);

inline TautClass divisor_class(MarkedSpace space, const DivisorGen& d) {
  return symbol_class(space, Symbol::of(d));
}

/// Evaluates an expression to strata. Products are multiplied factor by factor from
/// the left; a factor that is a linear combination of divisors goes through the
/// local divisor rules, anything else through the general product.
TautClass expand(const GeneratorExpr& expr, MarkedSpace space);

}  // namespace tautcalc
