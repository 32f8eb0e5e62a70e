#pragma once

#include <cstdint>
#include <vector>

#include "tripart/hull.hpp"
#include "tripart/partition.hpp"

namespace tripart {

/// Lattice points on the segment between the two removable cells (a single
/// cell when only one is removable), ordered left to right.
struct Diagonal {
    std::vector<Cell> cells;
};

/// Triangular partitions covered by p: one per removable cell.
std::vector<Partition> covers_down(const Partition& p);

/// Triangular partitions covering p: one per addable cell.
std::vector<Partition> covers_up(const Partition& p);

/// Least upper bound in the triangular Young lattice: the lattice points
/// of Conv(union of the two diagrams), assembled row by row under the
/// concave envelope of the union's row maxima.
Partition join(const Partition& p, const Partition& q);

/// Greatest lower bound: the lattice points strictly below the lower hull
/// of the complement of the pointwise minimum.
Partition meet(const Partition& p, const Partition& q);

/// Closed-form Mobius function of the triangular Young lattice; always in
/// {-1, 0, 1}. Requires p contained in q, both triangular.
int mobius(const Partition& p, const Partition& q);

/// Textbook recursive Mobius sum over the explicit interval [p, q];
/// oracle for the closed form. Guarded to |q| - |p| <= 20.
long long mobius_reference(const Partition& p, const Partition& q);

Diagonal diagonal(const Partition& p);

/// p minus its diagonal cells; triangular again.
Partition interior(const Partition& p);

/// Number of triangular subpartitions, via
/// I(p) = I(p minus left removable) + I(p minus right removable) - I(interior) + 1,
/// memoized on part lists. Throws when the memo would exceed memo_cap.
long long count_subpartitions(const Partition& p, size_t memo_cap = size_t(1) << 22);

/// Two-row triangular Young tableaux count, closed form.
long long tyt_count_two_row(long long t1, long long t2);

/// Saturated-chain count from empty to p in the triangular Young lattice,
/// memoized DFS; guarded to |p| <= 18.
long long tyt_count_brute(const Partition& p);

} // namespace tripart
