#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "schurpoly/arith.hpp"
#include "schurpoly/integer.hpp"

namespace schurpoly::lemmas {

// v = product of p^r over p^r || (2n+1)(2n-1)...(2n-k+2) with p >= k+4.
struct VProduct {
    unsigned long n = 0, k = 0;
    Int v;
    std::vector<arith::PrimePower> contributing;  // ascending p
};

// T = {2n+1, 2n-1, ..., 2n-k+2}; for each odd prime p <= k+2 one element of
// maximal p-valuation is removed (tie: the largest element); S is what is
// left.  r = (k+1)/2 - pi(k+2) + 1 and |S| >= r.
struct ReducedSet {
    std::vector<Int> T;
    std::vector<std::pair<unsigned long, Int>> removed;  // prime -> element, ascending prime
    std::vector<Int> S;
    long r = 0;
};

struct ScanRow {
    unsigned long n = 0, k = 0;
    Int v;
    Int bound;  // 2n+1
    bool holds = false;
};

// k odd; 5 <= k <= n, with k in {1, 3} also accepted (thresholds k+4 = 5, 7).
VProduct v_product(unsigned long n, unsigned long k);

ReducedSet reduced_set(unsigned long n, unsigned long k);

// (2n-k+2)^r / alpha_k with alpha_k = ((k-1)/2)! / 2^{nu_2(((k-1)/2)!)},
// exact; 0 when r < 0.
mpq_class lemmaT_bound(unsigned long n, unsigned long k);

// One row per n in [n_from, n_to], emitted in ascending n.  threads caps
// internal parallelism (0 or 1 = sequential).
void scan(unsigned long k, unsigned long n_from, unsigned long n_to,
          const std::function<void(const ScanRow&)>& emit, unsigned threads = 0);
std::vector<ScanRow> scan(unsigned long k, unsigned long n_from, unsigned long n_to);

// Case 1 of the explicit small-k bound: with a the largest element of S,
// returns whether some prime >= k+4 divides an element of T \ {a}; when it
// does, v >= 11(2n-5)/3, 13(2n-7)/3, 17(2n-9)/15 for k = 7, 9, 11 is
// asserted (internal error on violation).  k must be in {7, 9, 11}.
bool case1_bound_check(unsigned long n, unsigned long k);

}  // namespace schurpoly::lemmas
