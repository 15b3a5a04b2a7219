#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "schurpoly/integer.hpp"

namespace schurpoly::arith {

// p^r with p prime, r >= 1; the divisibility witness "p^r || m" of the paper.
struct PrimePower {
    Int p;
    unsigned long r = 1;
};

struct Factorization {
    Int value;                       // the factored integer, nonzero
    int sign = 1;                    // +1 or -1
    std::vector<PrimePower> factors; // distinct primes, ascending
};

// Deterministic primality: Miller-Rabin over the 12-prime witness base
// {2,...,37} (exact for n < 3.3e24), BPSW-style check beyond that.
bool is_prime(const Int& n);

// nu_p(m): largest e with p^e | m.  m = 0 or p not prime is a domain error.
// Sign-blind: nu(p, -m) == nu(p, m).
unsigned long nu(const Int& p, const Int& m);

// nu_p(n!) by Legendre's finite sum.
unsigned long nu_factorial(const Int& p, unsigned long n);

// nu_p(u_{2j}) where u_{2j} = 1*3*5*...*(2j-1); Legendre-based, no big product.
unsigned long nu_odd_double_factorial(const Int& p, unsigned long j);

// u_{2j} = 1*3*5*...*(2j-1), u_0 = 1.
Int odd_double_factorial(unsigned long j);

struct BezoutTriple {
    Int g, s, t;  // g = gcd(a,b) > 0 and a*s + b*t = g
};
BezoutTriple extended_gcd(const Int& a, const Int& b);

// One integer solution (x, y) of a*x + b*y = c, or nullopt when gcd(a,b)
// does not divide c.  Canonical choice: smallest |x|, tie broken toward the
// smaller x.  (a, b) = (0, 0) is a domain error.
std::optional<std::pair<Int, Int>> solve_linear_diophantine(const Int& a, const Int& b,
                                                            const Int& c);

// Least non-negative z with z = r5 (mod m5) and z = r3 (mod m3); the moduli
// must be coprime.
Int solve_congruence_pair(const Int& r5, const Int& m5, const Int& r3, const Int& m3);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// pi(x): number of primes <= x.
std::uint64_t prime_count(std::uint64_t x);

// Trial division by sieved primes up to 1e6, Pollard rho beyond.
Factorization factorize(const Int& value);

}  // namespace schurpoly::arith
