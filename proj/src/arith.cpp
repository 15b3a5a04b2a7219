#include "schurpoly/arith.hpp"

#include <algorithm>
#include <mutex>

namespace schurpoly::arith {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::vector<std::uint64_t> sieve_vector(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

// Shared sieve for trial division and prime counting.  Read-mostly: built
// once under the lock, then only read.
const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = sieve_vector(kTrialLimit);
    return primes;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = mod_floor(x * x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

// Deterministic for n < 3'317'044'064'679'887'385'961'981.
bool miller_rabin_12(const Int& n) {
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (mod_floor(Int(b), n) == 0) return false;
        if (miller_rabin_witness(n, Int(b), d, s)) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    // Brent's variant with deterministic restarts on the additive constant.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, diff;
        while (d == 1) {
            x = mod_floor(x * x + c, n);
            y = mod_floor(y * y + c, n);
            y = mod_floor(y * y + c, n);
            diff = x - y;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != 1 && d != n) return d;
    }
}

void factor_recursive(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Int mr_limit("3317044064679887385961981");
    if (n < mr_limit) return miller_rabin_12(n);
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

unsigned long nu(const Int& p, const Int& m) {
    if (m == 0) throw std::domain_error("nu: valuation of 0 is undefined");
    if (!is_prime(p)) throw std::domain_error("nu: p must be prime");
    Int a = abs(m);
    return mpz_remove(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

unsigned long nu_factorial(const Int& p, unsigned long n) {
    if (!is_prime(p)) throw std::domain_error("nu_factorial: p must be prime");
    unsigned long total = 0;
    Int q = p;
    while (q <= n) {
        Int term = Int(n) / q;
        total += term.get_ui();
        q *= p;
    }
    return total;
}

unsigned long nu_odd_double_factorial(const Int& p, unsigned long j) {
    if (p == 2) return 0;  // u_{2j} is odd
    // u_{2j} = (2j)! / (2^j * j!), and p is odd.
    return nu_factorial(p, 2 * j) - nu_factorial(p, j);
}

Int odd_double_factorial(unsigned long j) {
    Int r = 1;
    for (unsigned long i = 1; i <= j; ++i) r *= 2 * i - 1;
    return r;
}

BezoutTriple extended_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw std::domain_error("extended_gcd: gcd(0,0) undefined");
    BezoutTriple out;
    mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return out;
}

std::optional<std::pair<Int, Int>> solve_linear_diophantine(const Int& a, const Int& b,
                                                            const Int& c) {
    if (a == 0 && b == 0) throw std::domain_error("solve_linear_diophantine: a = b = 0");
    BezoutTriple e = extended_gcd(a, b);
    if (!mpz_divisible_p(c.get_mpz_t(), e.g.get_mpz_t())) return std::nullopt;
    Int scale = c / e.g;
    Int x0 = e.s * scale;
    if (b == 0) return std::make_pair(c / a, Int(0));
    if (a == 0) return std::make_pair(Int(0), c / b);
    // x ranges over x0 + (b/g)*Z; pick smallest |x|, tie -> smaller x.
    Int step = abs(b / e.g);
    Int r = mod_floor(x0, step);
    Int x = (r * 2 < step) ? r : r - step;
    Int y = (c - a * x) / b;
    return std::make_pair(x, y);
}

Int solve_congruence_pair(const Int& r5, const Int& m5, const Int& r3, const Int& m3) {
    if (m5 < 1 || m3 < 1) throw std::domain_error("solve_congruence_pair: moduli must be >= 1");
    BezoutTriple e = extended_gcd(m5, m3);
    if (e.g != 1) throw std::domain_error("solve_congruence_pair: moduli not coprime");
    // z = r5*t*m3 + r3*s*m5 satisfies both congruences.
    Int mm = m5 * m3;
    return mod_floor(r5 * e.t * m3 + r3 * e.s * m5, mm);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit <= kTrialLimit) {
        const auto& cache = trial_primes();
        auto end = std::upper_bound(cache.begin(), cache.end(), limit);
        return std::vector<std::uint64_t>(cache.begin(), end);
    }
    return sieve_vector(limit);
}

std::uint64_t prime_count(std::uint64_t x) {
    if (x <= kTrialLimit) {
        const auto& cache = trial_primes();
        return static_cast<std::uint64_t>(
            std::upper_bound(cache.begin(), cache.end(), x) - cache.begin());
    }
    return primes_up_to(x).size();
}

Factorization factorize(const Int& value) {
    if (value == 0) throw std::domain_error("factorize: 0 has no factorization");
    Factorization out;
    out.value = value;
    out.sign = value < 0 ? -1 : 1;
    Int rest = abs(value);
    for (std::uint64_t p : trial_primes()) {
        if (rest == 1) break;
        if (Int(p) * p > rest) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) out.factors.push_back({Int(p), e});
    }
    if (rest > 1) {
        if (is_prime(rest)) {
            out.factors.push_back({rest, 1});
        } else {
            std::vector<Int> primes;
            factor_recursive(rest, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                out.factors.push_back({primes[i], static_cast<unsigned long>(j - i)});
                i = j;
            }
        }
    }
    return out;
}

}  // namespace schurpoly::arith
