#include "schurpoly/lemmas.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace schurpoly::lemmas {

namespace {

void check_window(unsigned long n, unsigned long k) {
    if (k % 2 == 0 || k < 1 || k > n)
        throw std::domain_error("lemma window: k must be odd in [1, n]");
}

std::vector<Int> t_elements(unsigned long n, unsigned long k) {
    std::vector<Int> T;
    for (unsigned long i = 0; i < (k + 1) / 2; ++i) T.push_back(Int(2) * n + 1 - 2 * i);
    return T;
}

}  // namespace

VProduct v_product(unsigned long n, unsigned long k) {
    check_window(n, k);
    std::map<Int, unsigned long> exponents;
    for (const Int& t : t_elements(n, k))
        for (const auto& pp : arith::factorize(t).factors) exponents[pp.p] += pp.r;
    VProduct out;
    out.n = n;
    out.k = k;
    out.v = 1;
    for (const auto& [p, r] : exponents) {
        if (p < k + 4) continue;
        out.v *= pow_int(p, r);
        out.contributing.push_back({p, r});
    }
    return out;
}

ReducedSet reduced_set(unsigned long n, unsigned long k) {
    check_window(n, k);
    ReducedSet out;
    out.T = t_elements(n, k);
    std::vector<bool> gone(out.T.size(), false);
    for (std::uint64_t p : arith::primes_up_to(k + 2)) {
        if (p == 2) continue;
        // element of maximal p-valuation; tie -> the largest, and T is
        // sorted descending, so strict inequality keeps the earlier one
        std::size_t pick = 0;
        unsigned long best = arith::nu(Int(p), out.T[0]);
        for (std::size_t i = 1; i < out.T.size(); ++i) {
            unsigned long e = arith::nu(Int(p), out.T[i]);
            if (e > best) {
                best = e;
                pick = i;
            }
        }
        out.removed.emplace_back(p, out.T[pick]);
        gone[pick] = true;
    }
    for (std::size_t i = 0; i < out.T.size(); ++i)
        if (!gone[i]) out.S.push_back(out.T[i]);
    out.r = static_cast<long>((k + 1) / 2) - static_cast<long>(arith::prime_count(k + 2)) + 1;
    return out;
}

mpq_class lemmaT_bound(unsigned long n, unsigned long k) {
    check_window(n, k);
    long r = static_cast<long>((k + 1) / 2) - static_cast<long>(arith::prime_count(k + 2)) + 1;
    if (r < 0) return 0;
    unsigned long h = (k - 1) / 2;
    Int hfact;
    mpz_fac_ui(hfact.get_mpz_t(), h);
    Int alpha = hfact >> arith::nu_factorial(2, h);
    mpq_class bound(pow_int(Int(2) * n - k + 2, static_cast<unsigned long>(r)), alpha);
    bound.canonicalize();
    return bound;
}

namespace {

ScanRow scan_row(unsigned long k, unsigned long n) {
    ScanRow row;
    row.n = n;
    row.k = k;
    row.v = v_product(n, k).v;
    row.bound = Int(2) * n + 1;
    row.holds = row.v > row.bound;
    return row;
}

}  // namespace

void scan(unsigned long k, unsigned long n_from, unsigned long n_to,
          const std::function<void(const ScanRow&)>& emit, unsigned threads) {
    if (n_to < n_from) return;
    check_window(n_from, k);
    if (threads <= 1) {
        for (unsigned long n = n_from; n <= n_to; ++n) emit(scan_row(k, n));
        return;
    }
    // waves of `threads` blocks; rows emitted in ascending n, memory stays
    // bounded by threads * block
    constexpr unsigned long block = 2048;
    for (unsigned long wave = n_from; wave <= n_to;) {
        std::vector<std::future<std::vector<ScanRow>>> futures;
        for (unsigned t = 0; t < threads && wave <= n_to; ++t) {
            unsigned long lo = wave;
            unsigned long hi = std::min(n_to, lo + block - 1);
            wave = hi + 1;
            futures.push_back(std::async(std::launch::async, [k, lo, hi] {
                std::vector<ScanRow> rows;
                rows.reserve(hi - lo + 1);
                for (unsigned long n = lo; n <= hi; ++n) rows.push_back(scan_row(k, n));
                return rows;
            }));
        }
        for (auto& fut : futures)
            for (const ScanRow& row : fut.get()) emit(row);
    }
}

std::vector<ScanRow> scan(unsigned long k, unsigned long n_from, unsigned long n_to) {
    std::vector<ScanRow> rows;
    scan(k, n_from, n_to, [&rows](const ScanRow& r) { rows.push_back(r); });
    return rows;
}

bool case1_bound_check(unsigned long n, unsigned long k) {
    if (k != 7 && k != 9 && k != 11)
        throw std::domain_error("case1_bound_check: k must be in {7, 9, 11}");
    ReducedSet rs = reduced_set(n, k);
    if (rs.S.empty()) throw internal_error("case1_bound_check: S is empty (|S| >= 1 expected)");
    const Int a = *std::max_element(rs.S.begin(), rs.S.end());
    bool hypothesis = false;
    for (const Int& t : rs.T) {
        if (t == a) continue;
        for (const auto& pp : arith::factorize(t).factors)
            if (pp.p >= k + 4) hypothesis = true;
    }
    if (hypothesis) {
        Int v = v_product(n, k).v;
        // v >= pmin(2n - off)/den, compared exactly as v*den >= pmin*(2n - off)
        unsigned long pmin = k == 7 ? 11 : k == 9 ? 13 : 17;
        unsigned long off = k == 7 ? 5 : k == 9 ? 7 : 9;
        unsigned long den = k == 11 ? 15 : 3;
        if (v * den < pmin * (Int(2) * n - off))
            throw internal_error("case1_bound_check: explicit bound violated");
    }
    return hypothesis;
}

}  // namespace schurpoly::lemmas
