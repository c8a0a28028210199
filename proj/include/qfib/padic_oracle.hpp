#pragma once

#include <cstdint>

#include "qfib/local_solubility.hpp"

namespace qfib {

enum class OracleVerdict { Isotropic, Anisotropic, Unknown };

/// Depth at which the mod-p^k search is always decisive: 2*max_i v_p(a_i)+3
/// for odd p, 2*max_i v_2(a_i)+5 for p = 2. At this depth a verdict of
/// Unknown signals a bug, not a search limitation.
int default_oracle_depth(const DiagonalForm& form, std::int64_t p);

/// Exhaustive search over residue vectors mod p^depth, independent of the
/// symbol-based route:
///   - Anisotropic if no primitive zero of the form exists mod p^depth;
///   - Isotropic if some zero mod p^(2m+1) (2m+1 <= depth) carries a Hensel
///     certificate: an index i with v_p(2 a_i x_i) <= m;
///   - Unknown otherwise.
/// The search space is swept as value sumsets (meet in the middle), which
/// covers exactly the same vectors as a quadruple scan. Throws
/// qfib::resource_error if p^depth > 10^8.
OracleVerdict oracle_isotropic_mod_pk(const DiagonalForm& form,
                                      std::int64_t p, int depth);

} // namespace qfib
