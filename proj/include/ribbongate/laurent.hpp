#pragma once

#include <map>
#include <string>

#include "ribbongate/intmatrix.hpp"

namespace ribbongate {

/// Sparse integer Laurent polynomial: exponent -> nonzero coefficient.
/// The empty map is the zero polynomial. Alexander polynomials of
/// desk-scale knots are sparse and degree-bounded by crossing number,
/// so a map beats a dense vector here.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Zint constant);
    /// c * t^e
    static LaurentPoly term(Zint c, int e);
    static LaurentPoly one() { return LaurentPoly(Zint(1)); }

    bool is_zero() const { return coeff_.empty(); }
    int min_exp() const;  // throws ZeroPolynomial on 0
    int max_exp() const;
    Zint coeff(int e) const;
    const std::map<int, Zint>& coeffs() const { return coeff_; }

    void set(int e, Zint c);  // erases when c == 0

    bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }

    LaurentPoly operator-() const;
    std::string str() const;  // human-readable, lowest exponent first

private:
    std::map<int, Zint> coeff_;
};

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly laurent_sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient p / q; q must divide p in Z[t, t^-1].
LaurentPoly laurent_div_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Evaluate at an integer point. Negative exponents need t0 != 0; the
/// value must come out integral (it always does at t0 = +-1, the only
/// points the invariants ever use).
Zint laurent_eval(const LaurentPoly& p, const Zint& t0);

/// Canonical unit-normal form: multiply by +-t^k so the lowest exponent
/// is 0 and its coefficient is positive. Equality of normalized values
/// is equality up to units, which is how Alexander polynomials compare.
LaurentPoly laurent_normalize(const LaurentPoly& p);

/// t^(max_exp) * p(1/t) — the palindrome mirror used by symmetry tests.
LaurentPoly laurent_reverse(const LaurentPoly& p);

}  // namespace ribbongate
