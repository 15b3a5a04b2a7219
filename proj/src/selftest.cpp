#include "schurpoly/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "schurpoly/arith.hpp"
#include "schurpoly/family.hpp"
#include "schurpoly/lemmas.hpp"
#include "schurpoly/newton.hpp"
#include "schurpoly/poly.hpp"
#include "schurpoly/sharpness.hpp"

namespace schurpoly::selftest {

namespace {

using poly::IntPolynomial;

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- criterion 1: parameter table -----------------------------------------

void criterion_params() {
    family::schur_params(7);  // warm-up
    struct Row {
        unsigned long n;
        long kp, kpp, M;
    };
    for (const Row& row : {Row{1, 1, 1, 1}, Row{2, 5, 1, 1}, Row{13, 1, 1, 1}}) {
        auto t0 = std::chrono::steady_clock::now();
        family::SchurParams p = family::schur_params(row.n);
        double elapsed = ms_since(t0);
        require(p.k_prime == row.kp && p.k_double_prime == row.kpp && p.M == row.M,
                "schur_params(" + std::to_string(row.n) + ") mismatch");
        require(elapsed < 1.0,
                "schur_params(" + std::to_string(row.n) + ") took " + std::to_string(elapsed) +
                    " ms (budget 1 ms)");
    }
}

// ---- criterion 2: displayed factorizations ---------------------------------

void criterion_factorizations() {
    family::SchurCoefficients minus{2, {1, -4, 5}};
    IntPolynomial F_minus = family::build_F(minus);
    require(F_minus == IntPolynomial({15, 0, -20, 0, 5}), "build_F(2, (1,-4,5)) mismatch");
    auto q = poly::divide_exact(F_minus, IntPolynomial{-3, 0, 1});
    require(q.has_value() && *q == IntPolynomial({-5, 0, 5}),
            "(x^2-3) cofactor of 5x^4-20x^2+15 is not 5x^2-5");

    family::SchurCoefficients plus{2, {1, 4, 5}};
    IntPolynomial F_plus = family::build_F(plus);
    require(F_plus == IntPolynomial({15, 0, 20, 0, 5}), "build_F(2, (1,4,5)) mismatch");
    auto q2 = poly::divide_exact(F_plus, IntPolynomial{3, 0, 1});
    require(q2.has_value() && *q2 == IntPolynomial({5, 0, 5}),
            "(x^2+3) cofactor of 5x^4+20x^2+15 is not 5x^2+5");
}

// ---- criterion 3: direct-check range ---------------------------------------

void criterion_direct_check() {
    for (unsigned long k : {7ul, 9ul, 11ul})
        for (const auto& row : lemmas::scan(k, 14, 42))
            require(row.holds, "scan row fails at k=" + std::to_string(k) +
                                   ", n=" + std::to_string(row.n));
}

// ---- criteria 4 and 5: sharpness constructions -----------------------------

void check_sharpness(const sharpness::SharpnessResult& res, const Int& expected_an) {
    const auto& sc = res.coefficients;
    require(abs(sc.a[0]) == 1, "|a_0| != 1");
    require(abs(sc.a[sc.n]) == abs(expected_an), "a_n is not the advertised bound");
    // independent recomposition: factor * cofactor must rebuild F exactly
    require(poly::mul(res.factor, res.cofactor) == family::build_F(sc),
            "factor * cofactor != build_F");
}

void criterion_quadratic_sweep() {
    for (unsigned long n = 3; n <= 300; ++n) {
        Int kp = family::schur_params(n).k_prime;
        for (auto target : {sharpness::QuadraticTarget::x2_minus_3,
                            sharpness::QuadraticTarget::x2_plus_3}) {
            auto res = sharpness::construct_quadratic(n, target);
            check_sharpness(res, kp);
        }
    }
}

void criterion_quartic() {
    for (unsigned long n : {12ul, 62ul, 122ul, 312ul, 1337ul}) {
        auto res = sharpness::construct_quartic(n);
        check_sharpness(res, family::schur_params(n).k_double_prime);
        require(res.factor == IntPolynomial({-15, 0, -5, 0, 1}), "quartic factor mismatch");
    }
}

// ---- criterion 6: b_j / c_j identities --------------------------------------

void criterion_bc_identities() {
    auto bc = sharpness::bc_sequence(201);
    require(bc[0].b == 0 && bc[0].c == 1 && bc[1].b == 1 && bc[1].c == 0 && bc[2].b == 5 &&
                bc[2].c == 15,
            "bc basis rows wrong");
    for (unsigned long j = 1; j <= 200; ++j) {
        require(bc[j + 1].b == 5 * bc[j].b + 15 * bc[j - 1].b &&
                    bc[j + 1].c == 5 * bc[j].c + 15 * bc[j - 1].c,
                "recurrence fails at j=" + std::to_string(j));
    }
    for (unsigned long j = 2; j <= 200; ++j) {
        require(arith::nu(3, bc[j].c) == 1 && arith::nu(3, bc[j].b) == 0,
                "nu_3 identity fails at j=" + std::to_string(j));
        unsigned long v5c = arith::nu(5, bc[j].c), v5b = arith::nu(5, bc[j].b);
        require(2 * v5c >= j && 2 * v5b >= j - 1, "nu_5 bound fails at j=" + std::to_string(j));
        if (j % 2 == 0)
            require(v5c == j / 2 && 2 * v5b >= j,
                    "nu_5 even-j identity fails at j=" + std::to_string(j));
        else
            require(2 * v5c >= j + 1, "nu_5 odd-j bound fails at j=" + std::to_string(j));
    }
    for (unsigned long j = 0; j <= 200; ++j) {
        Int det = bc[j].c * bc[j + 1].b - bc[j + 1].c * bc[j].b;
        Int expect = pow_int(15ul, j);
        if (j % 2 == 1) expect = -expect;
        require(det == expect, "determinant identity fails at j=" + std::to_string(j));
    }
    // oracle: t^j - (b_j t + c_j) must be exactly divisible by t^2 - 5t - 15
    IntPolynomial q{-15, -5, 1};
    for (unsigned long j = 0; j <= 50; ++j) {
        std::vector<Int> mono(j + 1, 0);
        mono[j] = 1;
        IntPolynomial lhs =
            poly::sub(IntPolynomial(std::move(mono)), IntPolynomial({bc[j].c, bc[j].b}));
        require(lhs.is_zero() || poly::divide_exact(lhs, q).has_value(),
                "remainder oracle fails at j=" + std::to_string(j));
    }
}

// ---- criterion 7: Dumas composition ----------------------------------------

IntPolynomial random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound,
                          bool nonzero_constant) {
    std::uniform_int_distribution<int> deg_dist(1, max_deg);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    int deg = deg_dist(rng);
    std::vector<Int> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = coeff(rng);
    while (nonzero_constant && c[0] == 0) c[0] = coeff(rng);
    while (c[deg] == 0) c[deg] = coeff(rng);
    return IntPolynomial(std::move(c));
}

void criterion_dumas() {
    std::mt19937_64 rng(0x5eedd0a5ULL);
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial g = random_poly(rng, 8, 50, true);
        IntPolynomial h = random_poly(rng, 8, 50, true);
        IntPolynomial gh = poly::mul(g, h);
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
            auto np_g = newton::newton_polygon(g, p);
            auto np_h = newton::newton_polygon(h, p);
            auto np_gh = newton::newton_polygon(gh, p);
            require(newton::dumas_compose_check(np_g, np_h, np_gh),
                    "Dumas composition fails at trial " + std::to_string(trial) + ", p=" +
                        std::to_string(p));
        }
    }
}

// ---- criterion 8: slope bound ----------------------------------------------

void criterion_slope_bound() {
    std::mt19937_64 rng(0x51093u);
    std::uniform_int_distribution<unsigned long> n_dist(5, 200);
    std::uniform_int_distribution<long> coeff(-20, 20);
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
        unsigned long n = n_dist(rng);
        unsigned long kmax = std::min(n, 31ul);
        std::uniform_int_distribution<unsigned long> k_dist(0, (kmax - 5) / 2);
        unsigned long k = 5 + 2 * k_dist(rng);
        family::SchurCoefficients sc;
        sc.n = n;
        sc.a.assign(n + 1, 0);
        for (auto& c : sc.a) c = coeff(rng);
        sc.a[0] = (coeff(rng) & 1) ? 1 : -1;
        while (sc.a[n] == 0) sc.a[n] = coeff(rng);
        auto cert = family::lemma31_certificate(n, k, sc.a[n]);
        if (!cert) continue;
        ++found;
        require(family::slope_guard(sc, cert->p, k),
                "positive slope >= 1/(k+1) at n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ", p=" + to_decimal(cert->p));
    }
    require(found > 50, "too few certificates found to exercise the slope bound");
}

// ---- criterion 9: verdict soundness vs oracle -------------------------------

std::set<int> proper_sums(const std::vector<int>& degrees) {
    int total = 0;
    for (int d : degrees) total += d;
    std::vector<char> reach(total + 1, 0);
    reach[0] = 1;
    for (int d : degrees)
        for (int s = total - d; s >= 0; --s)
            if (reach[s]) reach[s + d] = 1;
    std::set<int> out;
    for (int s = 1; s < total; ++s)
        if (reach[s]) out.insert(s);
    return out;
}

// Search for a monic degree-d factor with coefficients in [-bound, bound].
bool has_small_monic_factor(const IntPolynomial& F, int d, long bound) {
    Int F0 = poly::eval(F, 0), F1 = poly::eval(F, 1), Fm1 = poly::eval(F, -1);
    // g(0) = cur[0] must be nonzero: F(0) != 0 rules out factors with root 0
    std::vector<long> cur(d, -bound);
    while (true) {
        if (cur[0] != 0) {
            std::vector<Int> gc(d + 1);
            for (int i = 0; i < d; ++i) gc[i] = cur[i];
            gc[d] = 1;
            IntPolynomial g(std::move(gc));
            Int g0 = poly::eval(g, 0), g1 = poly::eval(g, 1), gm1 = poly::eval(g, -1);
            bool plausible = mpz_divisible_p(F0.get_mpz_t(), g0.get_mpz_t()) &&
                             (F1 == 0 || (g1 != 0 && mpz_divisible_p(F1.get_mpz_t(), g1.get_mpz_t()))) &&
                             (Fm1 == 0 || (gm1 != 0 && mpz_divisible_p(Fm1.get_mpz_t(), gm1.get_mpz_t())));
            if (plausible && poly::divide_exact(F, g).has_value()) return true;
        }
        int i = 0;
        while (i < d && cur[i] == bound) cur[i++] = -bound;
        if (i == d) break;
        ++cur[i];
    }
    return false;
}

void criterion_soundness() {
    static const std::vector<std::uint64_t> oracle_primes = {3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::mt19937_64 rng(0xacce97edULL);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (unsigned long n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            family::SchurCoefficients sc;
            sc.n = n;
            sc.a.assign(n + 1, 0);
            for (auto& c : sc.a) c = coeff(rng);
            sc.a[0] = (coeff(rng) & 1) ? 1 : -1;
            while (sc.a[n] == 0) sc.a[n] = coeff(rng);

            auto v = family::verdict(sc);
            std::set<unsigned long> undecided(v.undecided.begin(), v.undecided.end());
            IntPolynomial F = family::build_F(sc);
            auto sieve = poly::degree_sieve(F, oracle_primes);

            std::optional<std::set<int>> feasible;
            for (const auto& pat : sieve.patterns) {
                auto sums = proper_sums(pat.degrees);
                if (!feasible) {
                    feasible = sums;
                } else {
                    std::set<int> inter;
                    for (int s : sums)
                        if (feasible->count(s)) inter.insert(s);
                    *feasible = inter;
                }
            }
            for (unsigned long d = 1; d <= n; ++d) {
                if (undecided.count(d)) continue;  // not excluded
                // excluded degree: the oracle must not realize it
                bool sieve_allows = !feasible || feasible->count(static_cast<int>(d)) > 0;
                if (!sieve_allows) continue;  // certainly no factor of degree d
                if (d <= 4)
                    require(!has_small_monic_factor(F, static_cast<int>(d), 6),
                            "excluded degree " + std::to_string(d) +
                                " realized by a small factor at n=" + std::to_string(n));
            }
        }
        // reducible fixtures: the quadratic sharpness sets must leave the
        // realized degrees 1 and 2 undecided
        if (n >= 3) {
            auto res = sharpness::construct_quadratic(n, sharpness::QuadraticTarget::x2_minus_3);
            auto v = family::verdict(res.coefficients);
            std::set<unsigned long> undecided(v.undecided.begin(), v.undecided.end());
            require(undecided.count(2) == 1,
                    "verdict excludes degree 2 on a set with an x^2-3 factor, n=" +
                        std::to_string(n));
        }
    }
}

// ---- criterion 10: valuation bound and |S| >= r ------------------------------

void criterion_valuations() {
    unsigned long v3 = 0;  // nu_3(u_{2n+2}) accumulated incrementally
    for (unsigned long n = 1; n <= 10000; ++n) {
        Int odd = Int(2) * n + 1;
        v3 += arith::nu(3, odd);
        if (n >= 3)
            require(v3 <= n - 1, "nu_3(u_{2n+2}) > n-1 at n=" + std::to_string(n));
        if (n % 97 == 0)  // Legendre cross-check on a subsample
            require(v3 == arith::nu_odd_double_factorial(3, n + 1),
                    "incremental nu_3 disagrees with Legendre at n=" + std::to_string(n));
    }
    for (unsigned long n = 5; n <= 2000; ++n) {
        for (unsigned long k = 5; k <= std::min(n, 31ul); k += 2) {
            auto rs = lemmas::reduced_set(n, k);
            require(static_cast<long>(rs.S.size()) >= rs.r,
                    "|S| < r at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
}

// ---- harness ----------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    double budget_ms;  // <= 0 means no budget
    std::function<void()> body;
};

}  // namespace

std::vector<CriterionResult> run_all() {
    const std::vector<Criterion> criteria = {
        {1, "parameter table (n = 1, 2, 13)", 0, criterion_params},
        {2, "displayed factorizations at n = 2", 0, criterion_factorizations},
        {3, "direct-check scan k in {7,9,11}, n in [14,42]", 1000, criterion_direct_check},
        {4, "quadratic sharpness sweep n in [3,300], both signs", 30000,
         criterion_quadratic_sweep},
        {5, "quartic sharpness n in {12,62,122,312,1337}", 60000, criterion_quartic},
        {6, "b_j/c_j identities for j <= 200", 1000, criterion_bc_identities},
        {7, "Dumas composition, 200 random pairs", 5000, criterion_dumas},
        {8, "slope bound under certificates, 100 samples", 10000, criterion_slope_bound},
        {9, "verdict soundness vs factor oracle, n <= 8", 60000, criterion_soundness},
        {10, "nu_3(u) bound to n = 10^4 and |S| >= r to n = 2000", 30000,
         criterion_valuations},
    };
    std::vector<CriterionResult> results;
    for (const auto& c : criteria) {
        CriterionResult res;
        res.id = c.id;
        res.name = c.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body();
            res.pass = true;
        } catch (const Failure& f) {
            res.detail = f.what;
        } catch (const std::exception& e) {
            res.detail = std::string("exception: ") + e.what();
        }
        res.ms = ms_since(t0);
        if (res.pass && c.budget_ms > 0 && res.ms > c.budget_ms) {
            res.pass = false;
            res.detail = "time budget exceeded: " + std::to_string(res.ms) + " ms > " +
                         std::to_string(c.budget_ms) + " ms";
        }
        results.push_back(std::move(res));
    }
    return results;
}

int run_and_report(std::ostream& out) {
    int failures = 0;
    for (const auto& res : run_all()) {
        std::ostringstream line;
        line << (res.pass ? "PASS" : "FAIL") << "  criterion " << res.id << ": " << res.name
             << "  (" << static_cast<long>(res.ms * 10) / 10.0 << " ms)";
        if (!res.pass) {
            line << "  -- " << res.detail;
            ++failures;
        }
        out << line.str() << "\n";
    }
    return failures;
}

}  // namespace schurpoly::selftest
