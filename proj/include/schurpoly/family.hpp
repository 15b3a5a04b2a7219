#pragma once

#include <optional>
#include <vector>

#include "schurpoly/integer.hpp"
#include "schurpoly/poly.hpp"

namespace schurpoly::family {

// The family's data (n, a_0..a_n): f(x) = sum_j a_j x^{2j} / u_{2j+2}
// with |a_0| = 1 and a_n != 0.
struct SchurCoefficients {
    unsigned long n = 1;
    std::vector<Int> a;  // a[j], j = 0..n

    void validate() const;  // throws std::domain_error on invariant violation
};

// 2n+1 = k' 3^u with 3 does not divide k'; (2n+1)(2n-1) = k'' 3^a 5^b with
// gcd(k'', 15) = 1; M = min(k', k'').
struct SchurParams {
    unsigned long n = 0;
    Int k_prime;
    unsigned long u = 0;  // nu_3(2n+1)
    Int k_double_prime;
    Int M;
};

// Witness that f cannot have a factor of degree k or k+1: a prime
// p >= k+4 with p^r | (2n+1)(2n-1)...(2n-k+2) and p^r not dividing a_n.
struct ExclusionCertificate {
    unsigned long k = 0;  // odd; excludes degrees {k, k+1}
    Int p;
    unsigned long r = 1;
};

enum class VerdictStatus { certified_irreducible, undecided };

struct IrreducibilityVerdict {
    VerdictStatus status = VerdictStatus::undecided;
    std::vector<ExclusionCertificate> certificates;
    std::vector<unsigned long> undecided;  // degrees in [1, n] not excluded
};

// F(x) = u_{2n+2} f(x): degree-2n integer polynomial whose x^{2j}
// coefficient is a_j (2n+1)(2n-1)...(2j+3).
poly::IntPolynomial build_F(const SchurCoefficients& sc);

SchurParams schur_params(unsigned long n);

// Strongest witness for the degree window {k, k+1}: the qualifying prime
// power p^r = p^{nu_p(P)} of largest value with p >= k+4 and p^r not
// dividing a_n, where P = (2n+1)(2n-1)...(2n-k+2).  k must be odd, in [1,n].
std::optional<ExclusionCertificate> lemma31_certificate(unsigned long n, unsigned long k,
                                                        const Int& a_n);

// Runs the certificate search for every odd k in [1, n] and aggregates.
// Any nontrivial factorization of the degree-2n polynomial F has a factor
// of degree <= n, so covering [1, n] certifies irreducibility; "undecided"
// is a sufficient-condition verdict and never asserts reducibility.
// Every issued certificate is cross-checked against the slope guard; a
// failure there is an internal error.
IrreducibilityVerdict verdict(const SchurCoefficients& sc);

// Every positive slope of the Newton polygon of build_F(sc) with respect to
// p is < 1/(k+1).  Holds for any certificate prime by the slope bound chain;
// requires |a_0| = 1.
bool slope_guard(const SchurCoefficients& sc, const Int& p, unsigned long k);

}  // namespace schurpoly::family
