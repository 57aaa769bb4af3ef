#pragma once

#include "ribbongate/diagram.hpp"
#include "ribbongate/intmatrix.hpp"
#include "ribbongate/laurent.hpp"

namespace ribbongate {

/// H_1 of the double branched cover, as invariant factors with the trivial
/// 1s dropped. The group is finite for knots, so order is the product of
/// the factors and equals det(K).
struct DoubleCoverHomology {
    std::vector<Zint> invariant_factors;
    Zint order;
};

/// Alexander polynomial from the Wirtinger presentation: one row per
/// crossing with entries {1-t, t, -1} against the over / under-in /
/// under-out generators, last row and column deleted, determinant taken by
/// fraction-free elimination over the Laurent ring, result normalized.
LaurentPoly alexander_poly(const KnotDiagram& d);

/// |Delta_K(-1)|, computed on the Alexander matrix evaluated at t = -1 and
/// cross-checked against the reduced Goeritz determinant on every call.
Zint determinant_knot(const KnotDiagram& d);

/// Reduced Goeritz matrix: checkerboard-shade the faces (the smaller color
/// class is white), assemble the white-region form, delete the last row and
/// column. Presents H_1 of the double branched cover.
IntMatrix goeritz_matrix(const KnotDiagram& d);

DoubleCoverHomology h1_double_cover(const KnotDiagram& d);

/// dim_{F_p} H_1(double cover; F_p) for odd prime p: the number of
/// invariant factors divisible by p, asserted equal to the corank of the
/// reduced Goeritz matrix over F_p.
std::size_t beta1_mod_p(const KnotDiagram& d, long long p);

/// Full Wirtinger Alexander matrix (one column per over-arc generator),
/// before row/column deletion. Exposed for the dual-route tests.
std::vector<std::vector<LaurentPoly>> alexander_matrix(const KnotDiagram& d);

/// Determinant of a square Laurent-polynomial matrix, fraction-free.
LaurentPoly laurent_matrix_det(std::vector<std::vector<LaurentPoly>> m);

}  // namespace ribbongate
