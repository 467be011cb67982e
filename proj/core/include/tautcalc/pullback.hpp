#pragma once

#include <vector>

#include "tautcalc/taut_class.hpp"

namespace tautcalc {

/// Pullback along the map Mbar_{g,n+1} -> Mbar_{g,n} forgetting marking `new_label`;
/// old markings >= new_label move up by one.
///
/// Each stratum pulls back to the sum over vertices v of the same graph with the new
/// leg on v. There kappa_a becomes kappa_a - psi_new^a, and each half-edge h at v with
/// psi exponent d >= 1 also gives minus the stratum where h and the new leg sit on a
/// rational bubble, with psi^{d-1} on the node branch at v.
TautClass pullback_forget(const TautClass& x, int new_label);

/// Renames markings: marking i becomes perm[i - 1] (a permutation of 1..n).
TautClass relabel(const TautClass& x, const std::vector<int>& perm);

}  // namespace tautcalc
