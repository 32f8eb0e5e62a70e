#include "tripart/hull.hpp"

#include <algorithm>
#include <cassert>

namespace tripart {

namespace {

using i128 = __int128;

i128 cross(const Cell& o, const Cell& a, const Cell& b) {
    return i128(a.x - o.x) * (b.y - o.y) - i128(a.y - o.y) * (b.x - o.x);
}

i128 dotp(long long nx, long long ny, const Cell& c) {
    return i128(nx) * c.x + i128(ny) * c.y;
}

// Graham scan over boundary cells that are already angularly ordered.
// Collinear middle points are dropped so only strict vertices remain.
std::vector<Cell> scan_hull(const std::vector<Cell>& pts, bool ccw) {
    std::vector<Cell> h;
    h.reserve(pts.size());
    for (const Cell& c : pts) {
        while (h.size() >= 2) {
            i128 turn = cross(h[h.size() - 2], h[h.size() - 1], c);
            if (ccw ? turn > 0 : turn < 0) break;
            h.pop_back();
        }
        h.push_back(c);
    }
    return h;
}

std::vector<Cell> sorted_by_x(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    return cells;
}

// Cells adjacent to chain[idx] whose edge is parallel to (dx, dy); when a
// neighbor edge is parallel, both of its endpoints are reported.
std::vector<Cell> cells_near_extreme(const std::vector<Cell>& chain, size_t idx,
                                     long long dx, long long dy) {
    auto parallel = [&](const Cell& a, const Cell& b) {
        return i128(b.x - a.x) * dy - i128(b.y - a.y) * dx == 0;
    };
    if (idx >= 1 && parallel(chain[idx - 1], chain[idx]))
        return {chain[idx - 1], chain[idx]};
    if (idx + 1 < chain.size() && parallel(chain[idx], chain[idx + 1]))
        return {chain[idx], chain[idx + 1]};
    return {chain[idx]};
}

} // namespace

std::pair<long long, long long> arm_leg(const Partition& p, const Cell& c) {
    if (!p.has_cell(c)) throw std::invalid_argument("arm_leg: cell not in partition");
    return {p.row(c.y) - c.x, p.column_height(c.x) - c.y};
}

SlopeInterval slope_interval(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("slope_interval of empty partition");
    long long k = p.height();
    long long w = p.width();
    // Single rows and columns have closed forms; this also keeps the CLI
    // usable on very wide or tall trivial inputs.
    if (k == 1) return {Fraction(0, 1), Fraction(1, w)};
    if (w == 1) return {Fraction(k - 1, k), Fraction(1, 1)};

    Partition conj = conjugate(p);
    // Running extrema kept as raw numerator/denominator pairs.
    long long lo_n = 0, lo_d = 1;  // t_minus = max leg/(arm+leg+1)
    long long hi_n = 1, hi_d = 1;  // t_plus = min (leg+1)/(arm+leg+1)
    for (long long y = 1; y <= k; ++y) {
        long long part = p.row(y);
        for (long long x = 1; x <= part; ++x) {
            long long arm = part - x;
            long long leg = conj.row(x) - y;
            long long den = arm + leg + 1;
            if (i128(leg) * lo_d > i128(lo_n) * den) { lo_n = leg; lo_d = den; }
            if (i128(leg + 1) * hi_d < i128(hi_n) * den) { hi_n = leg + 1; hi_d = den; }
        }
    }
    return {Fraction(lo_n, lo_d), Fraction(hi_n, hi_d)};
}

bool is_triangular_reference(const Partition& p) {
    if (p.empty()) return true;
    SlopeInterval si = slope_interval(p);
    return si.t_minus < si.t_plus;
}

HullChain partition_hull(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("partition_hull of empty partition");
    std::vector<Cell> hull = scan_hull(corner_cells(p), /*ccw=*/true);
    if (hull.size() > 1) hull.erase(hull.begin());  // drop (1,1)
    return {std::move(hull), true};
}

HullChain complement_hull(const Partition& p) {
    std::vector<Cell> hull = scan_hull(complementary_corner_cells(p), /*ccw=*/false);
    if (hull.size() > 1) hull.erase(hull.begin());  // drop (width+1, height+1)
    return {std::move(hull), false};
}

size_t extreme_vertex_index(const HullChain& chain, long long nx, long long ny) {
    const auto& v = chain.vertices;
    if (v.empty()) throw std::invalid_argument("extreme_vertex on empty chain");
    if (nx == 0 && ny == 0) throw std::invalid_argument("extreme_vertex with zero normal");
    size_t m = v.size();
    if (m == 1) return 0;

    // Along a convex chain the edge directions rotate monotonically, so
    // the predicate "next vertex does not decrease the dot product" flips
    // at most once. That makes the minimum findable by binary search even
    // across plateaus from edges perpendicular to the normal.
    auto ahead = [&](size_t j) {  // dot(v[j+1]) >= dot(v[j])
        return dotp(nx, ny, v[j + 1]) >= dotp(nx, ny, v[j]);
    };

    bool first = ahead(0), last = ahead(m - 2);
    if (first && last) return 0;       // nondecreasing throughout
    if (!first && !last) return m - 1; // nonincreasing throughout
    if (first && !last)                // rises then falls: minimum at an end
        return dotp(nx, ny, v[0]) <= dotp(nx, ny, v[m - 1]) ? 0 : m - 1;

    // Falls then rises: find the first index where the sequence turns.
    size_t lo = 0, hi = m - 2;  // ahead(lo) false, ahead(hi) true
    while (hi - lo > 1) {
        size_t mid = lo + (hi - lo) / 2;
        (ahead(mid) ? hi : lo) = mid;
    }
    return hi;
}

Cell extreme_vertex(const HullChain& chain, long long nx, long long ny) {
    return chain.vertices[extreme_vertex_index(chain, nx, ny)];
}

TriangularReport check_triangular(const Partition& p) {
    TriangularReport rep;
    if (p.empty()) {
        rep.triangular = true;
        rep.addable = {{1, 1}};
        return rep;
    }
    if (p.size() == 1) {
        rep.triangular = true;
        rep.removable = {{1, 1}};
        rep.addable = {{1, 2}, {2, 1}};
        return rep;
    }
    if (p.height() == 1) {
        rep.triangular = true;
        rep.removable = {{p.width(), 1}};
        rep.addable = {{1, 2}, {p.width() + 1, 1}};
        return rep;
    }
    if (p.width() == 1) {
        rep.triangular = true;
        rep.removable = {{1, p.height()}};
        rep.addable = {{1, p.height() + 1}, {2, 1}};
        return rep;
    }

    HullChain part_chain = partition_hull(p);
    HullChain comp_chain = complement_hull(p);
    const auto& w = part_chain.vertices;
    const auto& wc = comp_chain.vertices;

    // Step 2: binary search over edges of Conv(diagram) for a removable
    // pair. Chains are ordered by decreasing x, so index mid+1 is the left
    // endpoint of the edge.
    size_t lo = 0, hi = w.size() - 1;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        const Cell& c2 = w[mid];
        const Cell& c1 = w[mid + 1];
        long long dx = c2.x - c1.x, dy = c2.y - c1.y;
        long long nx = -dy, ny = dx;  // upward normal of the edge line
        size_t ci = extreme_vertex_index(comp_chain, nx, ny);
        const Cell& cp = wc[ci];
        i128 side = dotp(nx, ny, cp) - dotp(nx, ny, c1);
        if (side > 0) {
            // All of the complement lies strictly above: the edge line is a
            // cutting line and its endpoints are the removable cells.
            rep.triangular = true;
            rep.removable = sorted_by_x({c1, c2});
            rep.addable = sorted_by_x(cells_near_extreme(wc, ci, dx, dy));
            return rep;
        }
        if (cp.x < c1.x) lo = mid + 1;
        else if (cp.x > c2.x) hi = mid;
        else return rep;  // complement vertex inside Conv(diagram)
    }

    // Step 3: no removable pair; search Conv(complement) edges for an
    // addable pair instead.
    lo = 0;
    hi = wc.size() - 1;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        const Cell& c2 = wc[mid];
        const Cell& c1 = wc[mid + 1];
        long long dx = c2.x - c1.x, dy = c2.y - c1.y;
        long long nx = -dy, ny = dx;
        size_t ci = extreme_vertex_index(part_chain, -nx, -ny);  // most above
        const Cell& cc = w[ci];
        i128 side = dotp(nx, ny, cc) - dotp(nx, ny, c1);
        if (side < 0) {
            rep.triangular = true;
            rep.addable = sorted_by_x({c1, c2});
            rep.removable = sorted_by_x(cells_near_extreme(w, ci, dx, dy));
            return rep;
        }
        if (cc.x < c1.x) lo = mid + 1;
        else if (cc.x > c2.x) hi = mid;
        else return rep;  // diagram vertex inside Conv(complement)
    }
    return rep;  // neither a removable nor an addable pair: not triangular
}

void attach_slopes(TriangularReport& report, const Partition& p) {
    if (!report.triangular || p.empty()) return;
    SlopeInterval si = slope_interval(p);
    report.witness = Fraction::midpoint(si.t_minus, si.t_plus);
    report.interval = si;
}

std::vector<Cell> removable_via_extremes(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("removable_via_extremes of empty partition");
    SlopeInterval si = slope_interval(p);
    if (!(si.t_minus < si.t_plus))
        throw std::invalid_argument("removable_via_extremes: partition is not triangular");

    // Maximize t*x + (1-t)*y over cells. The maximum is attained at corner
    // cells, and the extreme argmax elements are corner cells themselves.
    auto best = [&](const Fraction& t, bool rightmost) {
        long long a = t.num(), b = t.den();
        Cell arg{0, 0};
        i128 m = INT64_MIN;
        for (const Cell& c : corner_cells(p)) {
            i128 val = i128(a) * c.x + i128(b - a) * c.y;
            bool better = val > m;
            if (val == m) better = rightmost ? c.x > arg.x : c.y > arg.y;
            if (better) { m = val; arg = c; }
        }
        return arg;
    };
    Cell cminus = best(si.t_minus, /*rightmost=*/true);
    Cell cplus = best(si.t_plus, /*rightmost=*/false);
    if (cminus == cplus) return {cminus};
    return sorted_by_x({cminus, cplus});
}

} // namespace tripart
