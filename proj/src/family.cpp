#include "schurpoly/family.hpp"

#include <algorithm>
#include <map>

#include "schurpoly/arith.hpp"
#include "schurpoly/newton.hpp"

namespace schurpoly::family {

void SchurCoefficients::validate() const {
    if (n < 1) throw std::domain_error("SchurCoefficients: n must be >= 1");
    if (a.size() != n + 1)
        throw std::domain_error("SchurCoefficients: expected n+1 coefficients");
    if (abs(a[0]) != 1) throw std::domain_error("SchurCoefficients: |a_0| must be 1");
    if (a[n] == 0) throw std::domain_error("SchurCoefficients: a_n must be nonzero");
}

poly::IntPolynomial build_F(const SchurCoefficients& sc) {
    sc.validate();
    std::vector<Int> coeffs(2 * sc.n + 1);
    Int suffix = 1;  // (2n+1)(2n-1)...(2j+3), empty product at j = n
    for (unsigned long j = sc.n + 1; j-- > 0;) {
        coeffs[2 * j] = sc.a[j] * suffix;
        if (j > 0) suffix *= 2 * j + 1;
    }
    return poly::IntPolynomial(std::move(coeffs));
}

SchurParams schur_params(unsigned long n) {
    if (n < 1) throw std::domain_error("schur_params: n must be >= 1");
    SchurParams out;
    out.n = n;
    out.k_prime = Int(2) * n + 1;
    out.u = mpz_remove(out.k_prime.get_mpz_t(), out.k_prime.get_mpz_t(), Int(3).get_mpz_t());
    out.k_double_prime = (Int(2) * n + 1) * (Int(2) * n - 1);
    mpz_remove(out.k_double_prime.get_mpz_t(), out.k_double_prime.get_mpz_t(),
               Int(3).get_mpz_t());
    mpz_remove(out.k_double_prime.get_mpz_t(), out.k_double_prime.get_mpz_t(),
               Int(5).get_mpz_t());
    out.M = std::min(out.k_prime, out.k_double_prime);
    return out;
}

std::optional<ExclusionCertificate> lemma31_certificate(unsigned long n, unsigned long k,
                                                        const Int& a_n) {
    if (k % 2 == 0 || k < 1 || k > n)
        throw std::domain_error("lemma31_certificate: k must be odd in [1, n]");
    if (a_n == 0) throw std::domain_error("lemma31_certificate: a_n must be nonzero");
    // P = (2n+1)(2n-1)...(2n-k+2): factor the (k+1)/2 elements separately
    std::map<Int, unsigned long> exponents;
    for (unsigned long i = 0; i < (k + 1) / 2; ++i) {
        Int t = Int(2) * n + 1 - 2 * i;
        for (const auto& pp : arith::factorize(t).factors) exponents[pp.p] += pp.r;
    }
    std::optional<ExclusionCertificate> best;
    Int best_power = 0;
    for (const auto& [p, r] : exponents) {
        if (p < k + 4) continue;
        Int power = pow_int(p, r);
        if (mpz_divisible_p(a_n.get_mpz_t(), power.get_mpz_t())) continue;
        if (power > best_power || (power == best_power && (!best || p > best->p))) {
            best = ExclusionCertificate{k, p, r};
            best_power = power;
        }
    }
    return best;
}

bool slope_guard(const SchurCoefficients& sc, const Int& p, unsigned long k) {
    if (!arith::is_prime(p) || p < k + 4)
        throw std::domain_error("slope_guard: requires a prime p >= k+4");
    newton::NewtonPolygon np = newton::newton_polygon(build_F(sc), p);
    for (const auto& e : np.edges) {
        if (!e.slope.positive()) continue;
        if (static_cast<__int128>(e.slope.num) * (k + 1) >= static_cast<__int128>(e.slope.den))
            return false;
    }
    return true;
}

IrreducibilityVerdict verdict(const SchurCoefficients& sc) {
    sc.validate();
    IrreducibilityVerdict out;
    std::vector<bool> covered(sc.n + 1, false);
    for (unsigned long k = 1; k <= sc.n; k += 2) {
        auto cert = lemma31_certificate(sc.n, k, sc.a[sc.n]);
        if (!cert) continue;
        if (!slope_guard(sc, cert->p, k))
            throw internal_error("verdict: certificate violates the slope guard");
        covered[k] = true;
        if (k + 1 <= sc.n) covered[k + 1] = true;
        out.certificates.push_back(*cert);
    }
    for (unsigned long d = 1; d <= sc.n; ++d)
        if (!covered[d]) out.undecided.push_back(d);
    out.status = out.undecided.empty() ? VerdictStatus::certified_irreducible
                                       : VerdictStatus::undecided;
    return out;
}

}  // namespace schurpoly::family
