#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurpoly/family.hpp"
#include "schurpoly/integer.hpp"
#include "schurpoly/poly.hpp"

namespace schurpoly::sharpness {

// t^j = b_j t + c_j (mod t^2 - 5t - 15).
struct BCPair {
    unsigned long j = 0;
    Int b, c;
};

// b_0 = 0, c_0 = 1; b_1 = 1, c_1 = 0; then b_{j+1} = 5 b_j + 15 b_{j-1} and
// c_{j+1} = 5 c_j + 15 c_{j-1}.
std::vector<BCPair> bc_sequence(unsigned long j_max);

enum class QuadraticTarget { x2_minus_3, x2_plus_3 };

struct SharpnessResult {
    family::SchurCoefficients coefficients;
    poly::IntPolynomial factor;
    poly::IntPolynomial cofactor;
    std::vector<std::pair<std::string, Int>> aux;  // construction intermediates
};

// Coefficients with a_n = k', a_0 = 1 making the chosen quadratic divide
// u_{2n+2} f(x); verified by exact division before returning (an
// unverifiable output is an internal error).  n >= 2.
SharpnessResult construct_quadratic(unsigned long n, QuadraticTarget target);

// 2n+1 = 5^ell m' and 2n-1 = 3^k m with gcd(m m', 15) = 1; defined exactly
// when k'' < k' and n >= 12, in which case k'' = m m'.
struct QuarticParams {
    unsigned long ell = 0;
    Int m_prime;
    unsigned long k = 0;
    Int m;
};

std::optional<QuarticParams> quartic_eligible(unsigned long n);

// Coefficients with a_n = k'' making x^4 - 5x^2 - 15 divide u_{2n+2} f(x),
// via the b_j/c_j Diophantine chain; verified by exact division.  Ineligible
// n is a domain error; an unsolvable step is an internal error.
SharpnessResult construct_quartic(unsigned long n);

}  // namespace schurpoly::sharpness
