#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripart/partition.hpp"

namespace tripart {

/// A counting sequence indexed by size n = 0..N.
struct CountSeries {
    std::string label;
    std::vector<long long> values;

    long long at(long long n) const { return values.at(static_cast<size_t>(n)); }
    long long max_n() const { return static_cast<long long>(values.size()) - 1; }
};

/// (a, b, d, e) with d < a and gcd(d, e) = 1: rightmost removable cell and
/// primitive escape direction of a triangular partition outside the
/// all-ones family.
struct PhiQuad {
    long long a = 0, b = 0, d = 0, e = 0;
};

/// Size of the triangular partition encoded by a separating-ray line with
/// primitive normal (a, b), k lattice points on the line, m of them kept,
/// and offsets (i, j).
long long n_delta(long long a, long long b, long long k, long long m, long long i, long long j);

/// Reference counter from the separating-ray generating function; slow,
/// guarded to N <= 2000.
CountSeries count_delta_gf(long long N);

/// Main engine: depth-first search through the tree of balanced words
/// with the (m, d) scan per word; OpenMP over subtrees rooted at the
/// length-8 frontier. Bit-identical for any thread count.
CountSeries count_delta_dfs(long long N, int threads = 1);

/// Ground truth by filtering all partitions; guarded to N <= 40.
CountSeries count_delta_brute(long long N);

/// Triangular partitions with two removable cells, via the same
/// generating function with the diagonal fully kept; guarded to N <= 2000.
CountSeries count_delta2(long long N);

struct DerivedClasses {
    CountSeries d1;     // one removable cell
    CountSeries up1;    // one addable cell
    CountSeries up2;    // two addable cells
    CountSeries d2up2;  // two removable and two addable
};

/// Class series from the Delta and Delta_2 series; entries at n = 0 are
/// fixed separately (the empty partition has one addable cell and no
/// removable cell). Needs delta and delta2 one term beyond the output.
DerivedClasses derive_class_series(const CountSeries& delta, const CountSeries& delta2);

struct DirectClasses {
    long long d1 = 0, d2 = 0, up1 = 0, up2 = 0, d2up2 = 0;
};

/// Census of triangular partitions of exactly n by removable/addable
/// counts; guarded to n <= 40.
DirectClasses classify_direct(long long n);

PhiQuad phi_map(const Partition& p);
Partition phi_inv(const PhiQuad& q);

struct TriangleCounts {
    long long less = 0;  // x >= d+1, y >= 1, e*x + d*y <= e + d*(l+1)
    long long geq = 0;   // x >= d+1, y >= 1, e*x + d*y <  e*(l+1) + d
};

/// Exact lattice-point counts of the two fit triangles.
TriangleCounts triangle_counts(long long d, long long e, long long l);

/// Triangular partitions fitting in an l x l square, totient closed form.
long long square_count(long long l);

struct RectCounts {
    std::optional<long long> minus1;      // l x (l-1) box, needs l >= 2
    std::optional<long long> minus2;      // l x (l-2) box, needs l >= 3
    long long width_exact = 0;            // width exactly l, height <= l
    std::optional<long long> narrow_tall; // width l-1 and height l, needs l >= 2
};

RectCounts rect_counts(long long l);

/// Euler totients phi(0..limit), linear sieve; phi(0) = 0.
std::vector<long long> totient_sieve(long long limit);

/// Ordered coprime pairs (a, b) with a*b < m.
long long coprime_pair_count(long long m);

} // namespace tripart
