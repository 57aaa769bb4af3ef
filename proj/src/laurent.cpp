#include "ribbongate/laurent.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace ribbongate {

LaurentPoly::LaurentPoly(Zint constant) {
    if (constant != 0) coeff_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::term(Zint c, int e) {
    LaurentPoly p;
    if (c != 0) p.coeff_[e] = std::move(c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (coeff_.empty()) throw ZeroPolynomial("min_exp of 0");
    return coeff_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (coeff_.empty()) throw ZeroPolynomial("max_exp of 0");
    return coeff_.rbegin()->first;
}

Zint LaurentPoly::coeff(int e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? Zint(0) : it->second;
}

void LaurentPoly::set(int e, Zint c) {
    if (c == 0)
        coeff_.erase(e);
    else
        coeff_[e] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeff_) out.coeff_[e] = -c;
    return out;
}

std::string LaurentPoly::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Zint a = abs(c);
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out = p;
    for (const auto& [e, c] : q.coeffs()) out.set(e, out.coeff(e) + c);
    return out;
}

LaurentPoly laurent_sub(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out = p;
    for (const auto& [e, c] : q.coeffs()) out.set(e, out.coeff(e) - c);
    return out;
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::map<int, Zint> acc;
    for (const auto& [ep, cp] : p.coeffs())
        for (const auto& [eq, cq] : q.coeffs()) acc[ep + eq] += cp * cq;
    LaurentPoly out;
    for (auto& [e, c] : acc)
        if (c != 0) out.set(e, std::move(c));
    return out;
}

LaurentPoly laurent_div_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw BadParameter("division by the zero polynomial");
    if (p.is_zero()) return {};

    // Shift both to ordinary polynomials with nonzero constant term; the
    // quotient then picks up the exponent difference.
    const int sp = p.min_exp(), sq = q.min_exp();
    const int dp = p.max_exp() - sp, dq = q.max_exp() - sq;
    if (dp < dq) throw BadParameter("inexact Laurent division (degree)");

    std::vector<Zint> num(dp + 1), den(dq + 1);
    for (const auto& [e, c] : p.coeffs()) num[e - sp] = c;
    for (const auto& [e, c] : q.coeffs()) den[e - sq] = c;

    std::vector<Zint> quo(dp - dq + 1);
    for (int k = dp - dq; k >= 0; --k) {
        Zint lead = num[k + dq];
        if (lead == 0) continue;
        if (lead % den[dq] != 0) throw BadParameter("inexact Laurent division (coefficient)");
        Zint f = lead / den[dq];
        quo[k] = f;
        for (int j = 0; j <= dq; ++j) num[k + j] -= f * den[j];
    }
    for (const Zint& r : num)
        if (r != 0) throw BadParameter("inexact Laurent division (remainder)");

    LaurentPoly out;
    for (int k = 0; k <= dp - dq; ++k)
        if (quo[k] != 0) out.set(k + sp - sq, quo[k]);
    return out;
}

Zint laurent_eval(const LaurentPoly& p, const Zint& t0) {
    if (p.is_zero()) return 0;
    const int lo = p.min_exp();
    if (lo < 0 && t0 == 0)
        throw EvalAtZero("negative exponents present, cannot evaluate at 0");

    // Evaluate t0^(-lo) * p as a plain polynomial, then divide the shift
    // back out; the division must be exact for the value to be an integer.
    const int shift = lo < 0 ? -lo : 0;
    Zint acc = 0;
    for (const auto& [e, c] : p.coeffs()) {
        Zint pw = 1;
        for (int k = 0; k < e + shift; ++k) pw *= t0;
        acc += c * pw;
    }
    if (shift == 0) return acc;
    Zint den = 1;
    for (int k = 0; k < shift; ++k) den *= t0;
    if (acc % den != 0)
        throw BadParameter("Laurent evaluation is not an integer at this point");
    return acc / den;
}

LaurentPoly laurent_normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("cannot normalize 0");
    const int lo = p.min_exp();
    const bool flip = p.coeffs().begin()->second < 0;
    LaurentPoly out;
    for (const auto& [e, c] : p.coeffs()) out.set(e - lo, flip ? Zint(-c) : c);
    return out;
}

LaurentPoly laurent_reverse(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    const int hi = p.max_exp();
    LaurentPoly out;
    for (const auto& [e, c] : p.coeffs()) out.set(hi - e, c);
    return out;
}

}  // namespace ribbongate
