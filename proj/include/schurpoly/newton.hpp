#pragma once

#include <string>
#include <vector>

#include "schurpoly/integer.hpp"
#include "schurpoly/poly.hpp"

namespace schurpoly::newton {

// Exact rational slope, reduced, den > 0.
struct Slope {
    long long num = 0;
    long long den = 1;

    static Slope of(long long dy, long long dx);  // reduces, dx != 0
    bool positive() const { return num > 0; }
    std::string str() const;  // "num/den"

    friend bool operator==(const Slope&, const Slope&) = default;
};

bool operator<(const Slope& a, const Slope& b);

// Lattice point of the valuation diagram: x = deg - i for coefficient index
// i, y = nu_p(coefficient).  Only nonzero coefficients produce spots.
struct Spot {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const Spot&, const Spot&) = default;
};

struct Edge {
    Spot from, to;  // from.x < to.x
    Slope slope;
};

// Lower convex hull of the spots of w(x) with respect to a prime, with
// consecutive equal-slope segments merged, so edge slopes strictly increase
// left to right.
struct NewtonPolygon {
    Int prime;
    std::vector<Spot> spots;     // ascending x
    std::vector<Spot> vertices;  // hull, left to right
    std::vector<Edge> edges;
};

// Requires w != 0 and w(0) != 0.
NewtonPolygon newton_polygon(const poly::IntPolynomial& w, const Int& p);

// Slope of the final edge; a single-vertex polygon (constant w) is a domain
// error.
Slope rightmost_slope(const NewtonPolygon& np);

// Dumas composition: for every slope, the horizontal length in np_fg equals
// the sum of the horizontal lengths in np_f and np_g.
bool dumas_compose_check(const NewtonPolygon& np_f, const NewtonPolygon& np_g,
                         const NewtonPolygon& np_fg);

// Geometric step of the degree-exclusion lemma: true iff every positive
// slope is < 1/(k+1) and the slope-<=0 edges span at most k-1 horizontal
// units.  True means factors of degree k and k+1 are impossible.
bool excluded_degrees_by_slope(const NewtonPolygon& np, long long k);

}  // namespace schurpoly::newton
