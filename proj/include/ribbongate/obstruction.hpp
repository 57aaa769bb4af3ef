#pragma once

#include <string>
#include <vector>

#include "ribbongate/invariants.hpp"

namespace ribbongate {

/// Minimal exact rational for the critical-point bound; numerators and
/// denominators here never leave desk scale.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    long long ceil_value() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    std::string str() const;
};

enum class Verdict { OBSTRUCTED, INCONCLUSIVE };

inline const char* to_string(Verdict v) {
    return v == Verdict::OBSTRUCTED ? "OBSTRUCTED" : "INCONCLUSIVE";
}

/// Everything needed to recheck the obstruction from the certificate alone:
/// the prime, both first Betti numbers of the double covers, the genus, the
/// exact bound, its integer strengthening, and the verdict. beta0 belongs
/// to the source (negative) end of the cobordism, beta1 to the target.
struct ObstructionCertificate {
    long long p = 3;
    std::size_t beta0 = 0;
    std::size_t beta1 = 0;
    int genus = 0;
    Rational raw_bound;
    long long c2_lower = 0;
    Verdict verdict = Verdict::INCONCLUSIVE;
    std::vector<Zint> source_factors;  // invariant factors of H1 at each end
    std::vector<Zint> target_factors;
};

/// (beta0 - beta1)/2 - g, exactly.
Rational livingston_bound(std::size_t beta0, std::size_t beta1, int g);

/// Sweep the odd prime divisors of det(K0), compute the bound at each, and
/// keep the certificate with the largest integer lower bound on the number
/// of index-2 critical points (ties to the smallest prime). OBSTRUCTED
/// means no ribbon — hence no decomposable Lagrangian — cobordism of genus
/// g runs from K0 to K1. jobs > 1 evaluates the sweep in parallel with a
/// deterministic merge.
ObstructionCertificate ribbon_verdict(const KnotDiagram& k0, const KnotDiagram& k1, int g,
                                      int jobs = 1);

/// beta1 of the n-fold connected sum is at least n when p | det(K);
/// computes the left side directly and returns the comparison.
bool check_prop_lower(const KnotDiagram& k, int n, long long p);

/// H1 of the double cover vanishes mod p when p does not divide det(K).
bool check_prop_vanish(const KnotDiagram& k, long long p);

/// Odd prime factors of n (> 0), ascending.
std::vector<long long> odd_prime_factors(const Zint& n);

nlohmann::json certificate_to_json(const ObstructionCertificate& c);

}  // namespace ribbongate
