#include "schurpoly/newton.hpp"

#include <map>
#include <numeric>

#include "schurpoly/arith.hpp"

namespace schurpoly::newton {

namespace {

using Wide = __int128;

// cross(a, b, c) > 0 when c lies strictly above the line a->b (left turn
// walking a -> b -> c with x increasing).
Wide cross(const Spot& a, const Spot& b, const Spot& c) {
    return Wide(b.x - a.x) * Wide(c.y - a.y) - Wide(b.y - a.y) * Wide(c.x - a.x);
}

}  // namespace

Slope Slope::of(long long dy, long long dx) {
    if (dx == 0) throw std::domain_error("Slope: vertical");
    long long g = std::gcd(dy < 0 ? -dy : dy, dx < 0 ? -dx : dx);
    if (g == 0) g = 1;
    if (dx < 0) {
        dy = -dy;
        dx = -dx;
    }
    return {dy / g, dx / g};
}

std::string Slope::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Slope& a, const Slope& b) {
    return Wide(a.num) * Wide(b.den) < Wide(b.num) * Wide(a.den);
}

NewtonPolygon newton_polygon(const poly::IntPolynomial& w, const Int& p) {
    if (w.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    if (w.coeff(0) == 0) throw std::domain_error("newton_polygon: zero constant term");
    NewtonPolygon np;
    np.prime = p;
    const long deg = w.degree();
    for (long i = deg; i >= 0; --i) {
        const Int& c = w.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        np.spots.push_back({deg - i, static_cast<long long>(arith::nu(p, c))});
    }
    // monotone chain lower hull; collinear middle points dropped, which
    // merges equal-slope segments into one edge
    for (const Spot& s : np.spots) {
        auto& h = np.vertices;
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), s) <= 0) h.pop_back();
        h.push_back(s);
    }
    for (std::size_t i = 1; i < np.vertices.size(); ++i) {
        const Spot& a = np.vertices[i - 1];
        const Spot& b = np.vertices[i];
        np.edges.push_back({a, b, Slope::of(b.y - a.y, b.x - a.x)});
    }
    return np;
}

Slope rightmost_slope(const NewtonPolygon& np) {
    if (np.edges.empty()) throw std::domain_error("rightmost_slope: polygon has no edge");
    return np.edges.back().slope;
}

namespace {

std::map<Slope, long long> slope_lengths(const NewtonPolygon& np) {
    std::map<Slope, long long> out;
    for (const Edge& e : np.edges) out[e.slope] += e.to.x - e.from.x;
    return out;
}

}  // namespace

bool dumas_compose_check(const NewtonPolygon& np_f, const NewtonPolygon& np_g,
                         const NewtonPolygon& np_fg) {
    if (np_f.prime != np_g.prime || np_f.prime != np_fg.prime)
        throw std::domain_error("dumas_compose_check: prime mismatch");
    long long deg_f = np_f.spots.back().x, deg_g = np_g.spots.back().x;
    if (deg_f + deg_g != np_fg.spots.back().x)
        throw std::domain_error("dumas_compose_check: degree mismatch");
    auto lf = slope_lengths(np_f);
    for (const auto& [slope, len] : slope_lengths(np_g)) lf[slope] += len;
    return lf == slope_lengths(np_fg);
}

bool excluded_degrees_by_slope(const NewtonPolygon& np, long long k) {
    long long flat_end = 0;  // right end of the slope-<=0 part
    for (const Edge& e : np.edges) {
        if (e.slope.positive()) {
            // need slope < 1/(k+1), exactly
            if (Wide(e.slope.num) * Wide(k + 1) >= Wide(e.slope.den)) return false;
        } else {
            flat_end = e.to.x;
        }
    }
    return flat_end <= k - 1;
}

}  // namespace schurpoly::newton
