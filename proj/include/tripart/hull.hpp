#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tripart/fraction.hpp"
#include "tripart/partition.hpp"

namespace tripart {

/// Strictly convex chain of lattice points, ordered by strictly decreasing
/// x. partition_side distinguishes the upper chain of Conv(diagram) from
/// the lower chain of Conv(complement).
struct HullChain {
    std::vector<Cell> vertices;
    bool partition_side = true;
};

/// Slopes t for which (t, 1-t) can be normal to a separating line: the
/// partition is triangular iff t_minus < t_plus.
struct SlopeInterval {
    Fraction t_minus;
    Fraction t_plus;
};

struct TriangularReport {
    bool triangular = false;
    std::vector<Cell> removable;  // sorted by x
    std::vector<Cell> addable;    // sorted by x
    std::optional<SlopeInterval> interval;
    std::optional<Fraction> witness;  // midpoint slope, filled by attach_slopes
};

/// arm = cells strictly right of c in its row, leg = cells strictly above
/// c in its column.
std::pair<long long, long long> arm_leg(const Partition& p, const Cell& c);

/// Linear scan over all cells; the ground-truth route.
SlopeInterval slope_interval(const Partition& p);
bool is_triangular_reference(const Partition& p);

/// Upper chain of Conv(diagram): Graham scan over corner_cells, then the
/// vertex (1,1) is dropped. A single-cell partition keeps [(1,1)].
HullChain partition_hull(const Partition& p);

/// Lower chain of Conv(complement), from complementary_corner_cells with
/// the far corner (width+1, height+1) dropped.
HullChain complement_hull(const Partition& p);

/// Vertex minimizing the dot product with `normal`, exact integers, ties
/// to the smaller chain index. Logarithmic via the chain's convexity.
/// Returns the vertex index.
size_t extreme_vertex_index(const HullChain& chain, long long nx, long long ny);
Cell extreme_vertex(const HullChain& chain, long long nx, long long ny);

/// Binary search over hull edges per the logarithmic recognition
/// algorithm; O(k log^2 k) after the corner scan. Does not fill the slope
/// fields (see attach_slopes).
TriangularReport check_triangular(const Partition& p);

/// Fills interval and the midpoint witness via the linear slope scan.
void attach_slopes(TriangularReport& report, const Partition& p);

/// Removable cells from the extreme-cell construction: the rightmost
/// maximizer under t_minus and the uppermost under t_plus.
std::vector<Cell> removable_via_extremes(const Partition& p);

} // namespace tripart
