#pragma once

#include <string>
#include <vector>

#include "ltsenv/triple_system.hpp"

namespace ltsenv::catalog {

/// [e,f,e] = 2e, [e,f,f] = -2f
TernarySystem s2();
/// span{x, y} inside so(3): [x,y,x] = y, [x,y,y] = -x
TernarySystem s2_tilde();
/// [a,b,a] = -b, [a,b,b] = 0 (solvable, not nilpotent)
TernarySystem r2();
/// so(3) with [x,y] = z, [y,z] = x, [z,x] = y as the system [a,b,c] = [[a,b],c]
TernarySystem so3();
/// [a,b,c] = (a,c) b - (b,c) a. Throws std::invalid_argument unless gram is
/// square, symmetric and nondegenerate.
TernarySystem bilinear(const std::vector<Vector>& gram);
TernarySystem bilinear_identity(std::size_t n);
TernarySystem abelian(std::size_t n);
TernarySystem direct_sum(const TernarySystem& a, const TernarySystem& b);

/// so(3) as a Lie algebra (binary bracket only), input for malcev_to_bol.
TernarySystem so3_lie();
/// Imaginary octonions with [a,b] = ab - ba: a 7-dimensional Malcev algebra
/// that is not Lie.
TernarySystem octonion_malcev();

/// Resolves a catalog identifier:
///   S2 | S2tilde | R2 | so3 | abelian:N | bilinear:N (identity form)
///   | bilinear-diag:d1,d2,... | so3-lie | octonion-malcev
/// and '+'-joined direct sums such as "S2+abelian:1".
/// Throws std::invalid_argument for unknown names.
TernarySystem by_name(const std::string& name);

/// Identifiers accepted by by_name, with a one-line description each.
std::vector<std::pair<std::string, std::string>> entries();

/// Systems the property and acceptance suites iterate over.
std::vector<TernarySystem> standard_lts();

}  // namespace ltsenv::catalog
