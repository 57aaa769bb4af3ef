#include "ribbongate/obstruction.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "ribbongate/version.hpp"

namespace ribbongate {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw BadParameter("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

long long Rational::ceil_value() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational livingston_bound(std::size_t beta0, std::size_t beta1, int g) {
    return Rational(static_cast<long long>(beta0) - static_cast<long long>(beta1) -
                        2LL * g,
                    2);
}

std::vector<long long> odd_prime_factors(const Zint& n) {
    if (n <= 0) throw BadParameter("factorization needs a positive integer");
    std::vector<long long> out;
    Zint rest = n;
    while (rest % 2 == 0) rest /= 2;
    for (Zint d = 3; d * d <= rest; d += 2) {
        if (rest % d != 0) continue;
        out.push_back(static_cast<long long>(d));
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1) out.push_back(static_cast<long long>(rest));
    return out;
}

namespace {

ObstructionCertificate certificate_at(const KnotDiagram& k0, const KnotDiagram& k1, int g,
                                      long long p) {
    ObstructionCertificate c;
    c.p = p;
    c.beta0 = beta1_mod_p(k0, p);
    c.beta1 = beta1_mod_p(k1, p);
    c.genus = g;
    c.raw_bound = livingston_bound(c.beta0, c.beta1, g);
    c.c2_lower = std::max(0LL, c.raw_bound.ceil_value());
    c.verdict = c.c2_lower >= 1 ? Verdict::OBSTRUCTED : Verdict::INCONCLUSIVE;
    return c;
}

}  // namespace

ObstructionCertificate ribbon_verdict(const KnotDiagram& k0, const KnotDiagram& k1, int g,
                                      int jobs) {
    if (!k0.is_knot() || !k1.is_knot()) throw NotAKnot("ribbon_verdict needs knot ends");
    if (g < 0) throw BadParameter("negative genus");

    // Only odd prime divisors of det(K0) can contribute: beta1 of the
    // source vanishes at every other prime, so the bound cannot be positive
    // there. det(K) is odd, so "odd prime factor" is just "prime factor".
    std::vector<long long> primes = odd_prime_factors(determinant_knot(k0));
    if (primes.empty()) primes.push_back(3);  // det = 1; report the vacuous bound at p = 3

    std::vector<ObstructionCertificate> certs(primes.size());
    if (jobs > 1 && primes.size() > 1) {
        std::vector<std::future<ObstructionCertificate>> futures;
        futures.reserve(primes.size());
        for (long long p : primes)
            futures.push_back(std::async(std::launch::async, certificate_at, std::cref(k0),
                                         std::cref(k1), g, p));
        for (std::size_t i = 0; i < futures.size(); ++i) certs[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < primes.size(); ++i)
            certs[i] = certificate_at(k0, k1, g, primes[i]);
    }

    // Deterministic merge: maximize c2_lower; primes ascend, so the first
    // maximum is the smallest prime among ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < certs.size(); ++i)
        if (certs[i].c2_lower > certs[best].c2_lower) best = i;

    ObstructionCertificate c = certs[best];
    c.source_factors = h1_double_cover(k0).invariant_factors;
    c.target_factors = h1_double_cover(k1).invariant_factors;
    return c;
}

bool check_prop_lower(const KnotDiagram& k, int n, long long p) {
    if (n < 1) throw BadParameter("copy count must be positive");
    if (p < 3 || !is_prime(p)) throw BadParameter("need an odd prime");
    if (!k.is_knot()) throw NotAKnot("check_prop_lower needs a knot");
    if (determinant_knot(k) % p != 0)
        throw HypothesisFailed(std::to_string(p) + " does not divide det(K)");

    KnotDiagram sum = k;
    for (int i = 1; i < n; ++i) sum = connected_sum(sum, k);
    return beta1_mod_p(sum, p) >= static_cast<std::size_t>(n);
}

bool check_prop_vanish(const KnotDiagram& k, long long p) {
    if (p < 3 || !is_prime(p)) throw BadParameter("need an odd prime");
    if (!k.is_knot()) throw NotAKnot("check_prop_vanish needs a knot");
    if (determinant_knot(k) % p == 0)
        throw HypothesisFailed(std::to_string(p) + " divides det(K)");
    return beta1_mod_p(k, p) == 0;
}

nlohmann::json certificate_to_json(const ObstructionCertificate& c) {
    auto factors = [](const std::vector<Zint>& fs) {
        nlohmann::json a = nlohmann::json::array();
        for (const Zint& f : fs) a.push_back(f.str());
        return a;
    };
    return nlohmann::json{{"p", c.p},
                          {"beta0", c.beta0},
                          {"beta1", c.beta1},
                          {"genus", c.genus},
                          {"raw_bound", {{"num", c.raw_bound.num}, {"den", c.raw_bound.den}}},
                          {"c2_lower", c.c2_lower},
                          {"verdict", to_string(c.verdict)},
                          {"source_invariant_factors", factors(c.source_factors)},
                          {"target_invariant_factors", factors(c.target_factors)},
                          {"version", kToolVersion}};
}

}  // namespace ribbongate
