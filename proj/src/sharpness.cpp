#include "schurpoly/sharpness.hpp"

#include <algorithm>

#include "schurpoly/arith.hpp"

namespace schurpoly::sharpness {

using arith::nu;
using arith::odd_double_factorial;
using arith::solve_congruence_pair;
using arith::solve_linear_diophantine;
using family::SchurCoefficients;
using poly::IntPolynomial;

std::vector<BCPair> bc_sequence(unsigned long j_max) {
    std::vector<BCPair> out;
    out.reserve(j_max + 1);
    out.push_back({0, 0, 1});
    if (j_max == 0) return out;
    out.push_back({1, 1, 0});
    for (unsigned long j = 2; j <= j_max; ++j) {
        const BCPair& p1 = out[j - 1];
        const BCPair& p0 = out[j - 2];
        out.push_back({j, 5 * p1.b + 15 * p0.b, 5 * p1.c + 15 * p0.c});
    }
    return out;
}

namespace {

SharpnessResult finish(SchurCoefficients sc, IntPolynomial target,
                       std::vector<std::pair<std::string, Int>> aux, const char* what) {
    IntPolynomial F = family::build_F(sc);
    auto cofactor = poly::divide_exact(F, target);
    if (!cofactor) throw internal_error(std::string(what) + ": final exact division failed");
    SharpnessResult out;
    out.coefficients = std::move(sc);
    out.factor = std::move(target);
    out.cofactor = std::move(*cofactor);
    out.aux = std::move(aux);
    return out;
}

}  // namespace

SharpnessResult construct_quadratic(unsigned long n, QuadraticTarget target) {
    if (n < 2) throw std::domain_error("construct_quadratic: n must be >= 2");
    const bool plus = target == QuadraticTarget::x2_plus_3;
    IntPolynomial quad = plus ? IntPolynomial{3, 0, 1} : IntPolynomial{-3, 0, 1};

    SchurCoefficients sc;
    sc.n = n;
    sc.a.assign(n + 1, 0);
    sc.a[0] = 1;
    std::vector<std::pair<std::string, Int>> aux;

    if (n == 2) {
        sc.a[1] = plus ? 4 : -4;
        sc.a[2] = 5;
        return finish(std::move(sc), std::move(quad), std::move(aux), "construct_quadratic");
    }

    family::SchurParams params = family::schur_params(n);
    const Int& kp = params.k_prime;
    const unsigned long u = params.u;
    // u_{2n+2} = k' 3^c m with 3 coprime to m; c <= n-1 so all exponents
    // below are non-negative
    const Int U = odd_double_factorial(n + 1);
    const unsigned long c = nu(3, U);
    if (c > n - 1) throw internal_error("construct_quadratic: nu_3(u_{2n+2}) > n-1");
    const Int m = U / (kp * pow_int(3ul, c));
    const Int m_prime = (plus && n % 2 == 1) ? m - pow_int(3ul, n - c)
                                             : m + pow_int(3ul, n - c);
    auto st = solve_linear_diophantine(pow_int(3ul, n + u - 1 - c), m, 1);
    if (!st) throw internal_error("construct_quadratic: Bezout step failed");
    const auto& [s, t] = *st;

    sc.a[n] = kp;
    if (plus) {
        sc.a[n - 1] = (n % 2 == 0) ? Int(s * m_prime) : Int(-s * m_prime);
        sc.a[1] = t * m_prime;
    } else {
        sc.a[n - 1] = -s * m_prime;
        sc.a[1] = -t * m_prime;
    }
    aux.emplace_back("c", c);
    aux.emplace_back("m", m);
    aux.emplace_back("m_prime", m_prime);
    aux.emplace_back("s", s);
    aux.emplace_back("t", t);
    return finish(std::move(sc), std::move(quad), std::move(aux), "construct_quadratic");
}

std::optional<QuarticParams> quartic_eligible(unsigned long n) {
    if (n < 12) return std::nullopt;
    family::SchurParams params = family::schur_params(n);
    if (!(params.k_double_prime < params.k_prime)) return std::nullopt;
    QuarticParams out;
    Int top = Int(2) * n + 1;
    out.ell = mpz_remove(top.get_mpz_t(), top.get_mpz_t(), Int(5).get_mpz_t());
    out.m_prime = top;
    Int bottom = Int(2) * n - 1;
    out.k = mpz_remove(bottom.get_mpz_t(), bottom.get_mpz_t(), Int(3).get_mpz_t());
    out.m = bottom;
    if (gcd(Int(out.m * out.m_prime), Int(15)) != 1 ||
        out.m * out.m_prime != params.k_double_prime)
        throw internal_error("quartic_eligible: parameter decomposition failed");
    return out;
}

SharpnessResult construct_quartic(unsigned long n) {
    auto par = quartic_eligible(n);
    if (!par) throw std::domain_error("construct_quartic: n is not eligible (needs k'' < k')");
    const auto& [ell, m_prime, k, m] = *par;

    auto bc = bc_sequence(n);
    const Int &b_n = bc[n].b, &c_n = bc[n].c;
    const Int &b_n1 = bc[n - 1].b, &c_n1 = bc[n - 1].c;
    const Int &b_n2 = bc[n - 2].b, &c_n2 = bc[n - 2].c;

    const Int p5 = pow_int(5ul, ell);
    const Int p3 = pow_int(3ul, k);
    const Int U = odd_double_factorial(n - 1);  // u_{2n-2}
    const Int D = p5 * p3 * U;
    if (2 * nu(5, D) > n)  // nu_5(5^ell 3^k u_{2n-2}) <= n/2
        throw internal_error("construct_quartic: nu_5 estimate violated");

    // choose 1-y = z with nu_5(c_n + D z) >= ell + min(nu_5(c_{n-1}),
    // nu_5(c_{n-2})) and 3 | z; minimal 5-adic modulus, least z via CRT
    const unsigned long target5 = ell + std::min(nu(5, c_n1), nu(5, c_n2));
    const unsigned long d5 = nu(5, D);
    Int mod5 = 1, z5 = 0;
    if (target5 > d5) {
        mod5 = pow_int(5ul, target5 - d5);
        if (nu(5, c_n) < d5) throw internal_error("construct_quartic: nu_5(c_n) < nu_5(D)");
        Int rhs = -(c_n / pow_int(5ul, d5));
        Int unit = (D / pow_int(5ul, d5)) % mod5;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod5.get_mpz_t()) == 0)
            throw internal_error("construct_quartic: 5-adic unit not invertible");
        z5 = mod_floor(rhs * inv, mod5);
    }
    const Int z = solve_congruence_pair(z5, mod5, 0, 3);
    const Int y = 1 - z;
    const Int shifted = c_n + D * z;
    if (shifted != 0 && nu(5, shifted) < target5)
        throw internal_error("construct_quartic: y selection missed the 5-adic target");

    auto r0s0 = solve_linear_diophantine(p5 * c_n1, p5 * p3 * c_n2, -shifted);
    if (!r0s0) throw internal_error("construct_quartic: eqseven has no solution");
    const auto& [r0, s0] = *r0s0;

    const Int delta = c_n2 * b_n1 - c_n1 * b_n2;  // = (-1)^n 15^(n-2)
    if (abs(delta) != pow_int(15ul, n - 2))
        throw internal_error("construct_quartic: determinant identity violated");
    // 3^{k-1} u_{2n-2} kept integral as 3^k (u_{2n-2}/3); 3 | u_{2n-2} for n >= 3
    if (!mpz_divisible_ui_p(U.get_mpz_t(), 3)) throw internal_error("construct_quartic: 3 | u_{2n-2} expected");
    const Int U3 = p3 * (U / 3);

    Int cc, cp, rhs2;
    if (n % 2 == 1) {
        cc = c_n1 * p5 * U3;
        cp = c_n1 * p5 * p3 * delta;
        rhs2 = (p5 * p3 * s0 + 15) * delta + p5 * p3 * U * z * b_n1;
    } else {
        cc = c_n2 * p5 * U3;
        cp = c_n2 * p5 * p3 * delta;
        rhs2 = -(p5 * r0 + 5) * delta + p5 * p3 * U * z * b_n2;
    }
    auto wt = solve_linear_diophantine(cc, cp, rhs2);
    if (!wt) throw internal_error("construct_quartic: eqten/eqeleven has no solution");
    const auto& [w, tt] = *wt;

    const Int r = r0 + p3 * c_n2 * tt;
    const Int s = s0 - c_n1 * tt;

    SchurCoefficients sc;
    sc.n = n;
    sc.a.assign(n + 1, 0);
    sc.a[0] = 1;
    sc.a[1] = w + y;
    sc.a[2] = -y;
    sc.a[n - 2] = s;
    sc.a[n - 1] = m * r;
    sc.a[n] = m * m_prime;

    std::vector<std::pair<std::string, Int>> aux;
    aux.emplace_back("ell", ell);
    aux.emplace_back("m_prime", m_prime);
    aux.emplace_back("k", k);
    aux.emplace_back("m", m);
    aux.emplace_back("y", y);
    aux.emplace_back("r0", r0);
    aux.emplace_back("s0", s0);
    aux.emplace_back("t", tt);
    aux.emplace_back("w", w);
    aux.emplace_back("r", r);
    aux.emplace_back("s", s);
    return finish(std::move(sc), IntPolynomial{-15, 0, -5, 0, 1}, std::move(aux),
                  "construct_quartic");
}

}  // namespace schurpoly::sharpness
