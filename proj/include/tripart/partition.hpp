#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tripart {

/// Lattice point (column, row), 1-indexed. Cells of a Ferrers diagram are
/// identified with their north-east corner point.
struct Cell {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const Cell& a, const Cell& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

/// Raised by parse_partition on malformed text (the CLI maps it to a usage
/// error, unlike domain errors from the algorithms).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Integer partition: weakly decreasing positive parts, possibly empty.
/// Immutable after construction; the empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    long long height() const { return static_cast<long long>(parts_.size()); }
    long long width() const { return parts_.empty() ? 0 : parts_.front(); }
    long long size() const { return size_; }

    /// Part in row y (1-indexed); 0 when the row is above the partition.
    long long row(long long y) const {
        return (y >= 1 && y <= height()) ? parts_[static_cast<size_t>(y - 1)] : 0;
    }
    /// Column height at column x (1-indexed): number of rows with a cell in
    /// column x. This is the conjugate's part without materializing it.
    long long column_height(long long x) const;

    bool has_cell(const Cell& c) const {
        return c.y >= 1 && c.y <= height() && c.x >= 1 && c.x <= row(c.y);
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<long long> parts_;
    long long size_ = 0;
};

/// Parses "8,6,5,3,1" or multiplicity form "5^576,4^1037"; whitespace is
/// ignored, the empty string is the empty partition. Rejects zero parts,
/// non-monotone part lists, and values at or above 2^31 (coordinates must
/// stay small enough for exact 128-bit geometry products downstream).
Partition parse_partition(const std::string& text);

/// Canonical text form: multiplicity form "P^M" when a part repeats at
/// least 4 times, plain comma-separated otherwise.
std::string to_text(const Partition& p);

Partition conjugate(const Partition& p);

/// C(lambda): corner cells plus the anchors (1,1), (width,1), (1,height),
/// de-duplicated, in counter-clockwise order starting at (1,1).
std::vector<Cell> corner_cells(const Partition& p);

/// C'(lambda): complementary corner cells plus (width+1, height+1), in
/// clockwise order starting at (width+1, height+1). Empty partition
/// yields [(1,1)].
std::vector<Cell> complementary_corner_cells(const Partition& p);

/// Containment of Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

/// The staircase (k, k-1, ..., 1); empty for k = 0.
Partition staircase(long long k);

/// The largest triangular partition fitting in an h x l box; a triangular
/// partition lies in the box iff it is a subpartition of this one.
Partition bounding_partition(long long h, long long l);

struct WideTall {
    bool wide = false;
    bool tall = false;
};

/// Wide means distinct parts, tall means the conjugate is wide; both hold
/// exactly for staircases. Assumes the input is triangular.
WideTall classify_wide_tall(const Partition& p);

} // namespace tripart
