#include "schurpoly/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schurpoly::poly {

namespace {

void normalize(std::vector<Int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int kZero = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize(coeffs_);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    normalize(coeffs_);
}

IntPolynomial IntPolynomial::from_string(const std::string& text) {
    std::vector<Int> coeffs;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto begin = token.find_first_not_of(" \t");
        auto end = token.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw std::domain_error("polynomial parse: empty coefficient");
        token = token.substr(begin, end - begin + 1);
        Int v;
        if (mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0)
            throw std::domain_error("polynomial parse: bad integer '" + token + "'");
        coeffs.push_back(std::move(v));
    }
    if (coeffs.empty()) throw std::domain_error("polynomial parse: empty input");
    return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += to_decimal(coeffs_[i]);
    }
    return out;
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Int eval(const IntPolynomial& f, const Int& x) {
    Int r = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) r = r * x + *it;
    return r;
}

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<Int> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<Int> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Int> c(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), f.coeffs()[i].get_mpz_t(), g.coeffs()[j].get_mpz_t());
    return IntPolynomial(std::move(c));
}

IntPolynomial mul(const IntPolynomial& f, const Int& c) {
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i] * c;
    return IntPolynomial(std::move(out));
}

IntPolynomial neg(const IntPolynomial& f) { return mul(f, Int(-1)); }

std::optional<IntPolynomial> divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (f.is_zero()) return IntPolynomial{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Int> rem = f.coeffs();
    std::vector<Int> q(f.coeffs().size() - g.coeffs().size() + 1);
    const auto& gc = g.coeffs();
    for (std::size_t i = q.size(); i-- > 0;) {
        Int& head = rem[i + gc.size() - 1];
        if (!mpz_divisible_p(head.get_mpz_t(), gc.back().get_mpz_t())) return std::nullopt;
        q[i] = head / gc.back();
        if (q[i] != 0)
            for (std::size_t j = 0; j < gc.size(); ++j)
                mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), gc[j].get_mpz_t());
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
}

Int content(const IntPolynomial& f) {
    Int g = 0;
    for (const Int& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial derivative(const IntPolynomial& f) {
    if (f.degree() < 1) return {};
    std::vector<Int> c(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) c[i - 1] = f.coeffs()[i] * Int(i);
    return IntPolynomial(std::move(c));
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& f) {
    Int c = content(f);
    if (c == 0) return {};
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i] / c;
    IntPolynomial p(std::move(out));
    if (p.leading() < 0) p = neg(p);
    return p;
}

// lc(g)^(deg f - deg g + 1) * f mod g, the pseudo-remainder.
IntPolynomial pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<Int> rem = f.coeffs();
    const auto& gc = g.coeffs();
    long steps = f.degree() - g.degree() + 1;
    for (long i = f.degree(); i >= g.degree() && steps > 0;) {
        Int head = rem[i];
        for (std::size_t j = 0; j < rem.size(); ++j) rem[j] *= gc.back();
        for (std::size_t j = 0; j < gc.size(); ++j)
            mpz_submul(rem[i - g.degree() + j].get_mpz_t(), head.get_mpz_t(), gc[j].get_mpz_t());
        --steps;
        while (i >= 0 && rem[i] == 0) --i;
    }
    normalize(rem);
    return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = primitive_part(a), g = primitive_part(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_rem(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Arithmetic mod p (p < 2^31), used only by the degree sieve.

namespace {

using ModPoly = std::vector<std::uint64_t>;  // constant first, normalized

void mp_normalize(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_reduce(const IntPolynomial& f, std::uint64_t p) {
    ModPoly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    mp_normalize(out);
    return out;
}

std::uint64_t mp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mp_inv(std::uint64_t a, std::uint64_t p) { return mp_pow(a, p - 2, p); }

ModPoly mp_monic(ModPoly f, std::uint64_t p) {
    if (f.empty()) return f;
    std::uint64_t s = mp_inv(f.back(), p);
    for (auto& c : f) c = c * s % p;
    return f;
}

ModPoly mp_rem(ModPoly f, const ModPoly& g, std::uint64_t p) {
    // g monic and nonempty
    while (f.size() >= g.size()) {
        std::uint64_t head = f.back();
        std::size_t off = f.size() - g.size();
        if (head)
            for (std::size_t j = 0; j + 1 < g.size(); ++j)
                f[off + j] = (f[off + j] + p - head * g[j] % p) % p;
        f.pop_back();
        mp_normalize(f);
    }
    return f;
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    mp_normalize(c);
    return mp_rem(std::move(c), m, p);
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        b = mp_monic(std::move(b), p);
        a = mp_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return mp_monic(std::move(a), p);
}

ModPoly mp_derivative(const ModPoly& f, std::uint64_t p) {
    if (f.size() < 2) return {};
    ModPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] % p * (i % p) % p;
    mp_normalize(d);
    return d;
}

ModPoly mp_powmod_x(std::uint64_t e, const ModPoly& m, std::uint64_t p) {
    // x^e mod m
    ModPoly r{1}, b{0, 1};
    b = mp_rem(std::move(b), m, p);
    while (e) {
        if (e & 1) r = mp_mulmod(r, b, m, p);
        b = mp_mulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}

ModPoly mp_divexact(ModPoly f, const ModPoly& g, std::uint64_t p) {
    // g monic divisor of f
    ModPoly q(f.size() - g.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        std::uint64_t head = f[i + g.size() - 1];
        q[i] = head;
        if (head)
            for (std::size_t j = 0; j < g.size(); ++j)
                f[i + j] = (f[i + j] + p - head * g[j] % p) % p;
    }
    mp_normalize(q);
    return q;
}

}  // namespace

std::optional<std::vector<int>> factor_degrees_mod_p(const IntPolynomial& f, std::uint64_t p) {
    if (f.degree() < 1) return std::nullopt;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) return std::nullopt;
    ModPoly fp = mp_monic(mp_reduce(f, p), p);
    ModPoly d = mp_derivative(fp, p);
    if (d.empty() || mp_gcd(fp, d, p).size() != 1) return std::nullopt;  // not squarefree mod p

    std::vector<int> degrees;
    ModPoly rest = fp;
    // distinct-degree factorization: gcd(x^(p^d) - x, rest) collects all
    // irreducible factors of degree d
    ModPoly xq{0, 1};
    xq = mp_rem(std::move(xq), rest, p);
    for (int deg = 1; rest.size() > 1 && 2 * deg <= static_cast<int>(rest.size()) - 1; ++deg) {
        // raise to p-th power once per stage: xq = x^(p^deg) mod rest
        ModPoly xq_next{1};
        {
            // compute xq^p mod rest by square-and-multiply on exponent p
            ModPoly base = xq;
            std::uint64_t e = p;
            while (e) {
                if (e & 1) xq_next = mp_mulmod(xq_next, base, rest, p);
                base = mp_mulmod(base, base, rest, p);
                e >>= 1;
            }
        }
        xq = std::move(xq_next);
        ModPoly diff = xq;
        // diff -= x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        mp_normalize(diff);
        ModPoly g = mp_gcd(rest, diff, p);
        if (g.size() > 1) {
            int found = static_cast<int>(g.size()) - 1;
            for (int i = 0; i < found / deg; ++i) degrees.push_back(deg);
            rest = mp_divexact(std::move(rest), g, p);
            xq = mp_rem(std::move(xq), rest, p);
        }
    }
    if (rest.size() > 1) degrees.push_back(static_cast<int>(rest.size()) - 1);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

namespace {

// All degrees realizable by a nonempty proper sub-multiset of `degrees`.
std::set<int> proper_subset_sums(const std::vector<int>& degrees) {
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

}  // namespace

SieveResult degree_sieve(const IntPolynomial& f, const std::vector<std::uint64_t>& primes) {
    SieveResult result;
    if (f.degree() < 1) return result;
    IntPolynomial g = poly_gcd(f, derivative(f));
    if (g.degree() >= 1) return result;  // not squarefree over Q: oracle abstains

    std::optional<std::set<int>> feasible;
    for (std::uint64_t p : primes) {
        auto degrees = factor_degrees_mod_p(f, p);
        if (!degrees) continue;
        std::set<int> sums = proper_subset_sums(*degrees);
        result.patterns.push_back({p, std::move(*degrees)});
        if (!feasible) {
            feasible = std::move(sums);
        } else {
            std::set<int> inter;
            std::set_intersection(feasible->begin(), feasible->end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            *feasible = std::move(inter);
        }
    }
    if (feasible && feasible->empty()) result.status = SieveStatus::irreducible_certified;
    return result;
}

}  // namespace schurpoly::poly
