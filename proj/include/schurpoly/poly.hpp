#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "schurpoly/integer.hpp"

namespace schurpoly::poly {

// Dense integer polynomial, constant term first.  Normalized: the
// highest-index stored coefficient is nonzero; the zero polynomial stores
// nothing and has degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    // Comma-separated coefficients, constant term first: "15,0,-20,0,5".
    static IntPolynomial from_string(const std::string& text);
    std::string to_string() const;

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    std::vector<Int> coeffs_;
};

Int eval(const IntPolynomial& f, const Int& x);
IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial mul(const IntPolynomial& f, const Int& c);
IntPolynomial neg(const IntPolynomial& f);

inline IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) { return add(f, g); }
inline IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) { return sub(f, g); }
inline IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) { return mul(f, g); }

// Quotient h with f = g*h over the integers, or nullopt when no such h
// exists.  Classical long division with a per-step integrality check.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& f, const IntPolynomial& g);

// gcd of the coefficients, non-negative; 0 for the zero polynomial.
Int content(const IntPolynomial& f);

IntPolynomial derivative(const IntPolynomial& f);

// Primitive gcd over Z[x] (primitive pseudo-remainder sequence), defined up
// to sign; the result is primitive with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Degrees of the irreducible factors of f mod p (with multiplicity), via
// distinct-degree factorization.  nullopt when p is unusable for the degree
// sieve: p divides the leading coefficient, or f mod p is not squarefree.
std::optional<std::vector<int>> factor_degrees_mod_p(const IntPolynomial& f, std::uint64_t p);

struct DegreePattern {
    std::uint64_t prime = 0;
    std::vector<int> degrees;  // ascending, summing to deg f
};

enum class SieveStatus { irreducible_certified, inconclusive };

struct SieveResult {
    SieveStatus status = SieveStatus::inconclusive;
    std::vector<DegreePattern> patterns;
};

// Factor-degree sieve: certifies irreducibility over Q when no nonempty
// proper sub-multiset sum of factor degrees is feasible across all usable
// primes.  Primes where f mod p is unusable are skipped; a polynomial that
// is not squarefree over Q is reported inconclusive with no patterns.
SieveResult degree_sieve(const IntPolynomial& f, const std::vector<std::uint64_t>& primes);

}  // namespace schurpoly::poly
