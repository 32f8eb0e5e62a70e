#include "tripart/partition.hpp"

#include <algorithm>
#include <cctype>

namespace tripart {

namespace {

constexpr long long kCoordLimit = 1LL << 31;

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("partition size overflow");
    return r;
}

} // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ = checked_add(size_, parts_[i]);
    }
}

long long Partition::column_height(long long x) const {
    if (x < 1 || x > width()) return 0;
    // parts_ descending: count of parts >= x.
    auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                               [](long long part, long long v) { return part >= v; });
    return static_cast<long long>(it - parts_.begin());
}

Partition parse_partition(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

    std::vector<long long> parts;
    if (s.empty()) return Partition{};

    size_t pos = 0;
    auto read_int = [&](const char* what) -> long long {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error(std::string("expected ") + what + " in partition text");
        if (pos - start > 18) throw parse_error("partition value too large");
        long long v = std::stoll(s.substr(start, pos - start));
        if (v >= kCoordLimit) throw parse_error("partition value too large (must be below 2^31)");
        return v;
    };

    while (true) {
        long long part = read_int("part");
        if (part == 0) throw parse_error("zero parts are not allowed");
        long long mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            mult = read_int("multiplicity");
            if (mult == 0) throw parse_error("zero multiplicity is not allowed");
        }
        if (!parts.empty() && parts.back() < part)
            throw parse_error("parts must be weakly decreasing");
        if (static_cast<long long>(parts.size()) + mult >= kCoordLimit)
            throw parse_error("too many parts (height must be below 2^31)");
        parts.insert(parts.end(), static_cast<size_t>(mult), part);
        if (pos == s.size()) break;
        if (s[pos] != ',') throw parse_error("expected ',' in partition text");
        ++pos;
        if (pos == s.size()) throw parse_error("trailing ',' in partition text");
    }
    return Partition(std::move(parts));
}

std::string to_text(const Partition& p) {
    const auto& parts = p.parts();
    std::string out;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        size_t run = j - i;
        if (!out.empty()) out += ",";
        if (run >= 4) {
            out += std::to_string(parts[i]) + "^" + std::to_string(run);
        } else {
            for (size_t r = 0; r < run; ++r) {
                if (r > 0) out += ",";
                out += std::to_string(parts[i]);
            }
        }
        i = j;
    }
    return out;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<long long> parts(static_cast<size_t>(p.width()));
    long long k = p.height();
    long long col = 1;
    // Rows are sorted, so column heights drop at each distinct part value.
    for (long long y = k; y >= 1; --y) {
        long long part = p.row(y);
        for (; col <= part; ++col) parts[static_cast<size_t>(col - 1)] = y;
    }
    return Partition(std::move(parts));
}

std::vector<Cell> corner_cells(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("corner_cells of empty partition");
    long long k = p.height();
    std::vector<Cell> out;
    out.push_back({1, 1});
    auto push_unique = [&](Cell c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    push_unique({p.width(), 1});
    for (long long y = 1; y <= k; ++y)
        if (y == k || p.row(y) > p.row(y + 1)) push_unique({p.row(y), y});
    push_unique({1, k});
    return out;
}

std::vector<Cell> complementary_corner_cells(const Partition& p) {
    long long k = p.height();
    std::vector<Cell> out;
    out.push_back({p.width() + 1, k + 1});
    auto push_unique = [&](Cell c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    push_unique({p.width() + 1, 1});
    for (long long y = 2; y <= k; ++y)
        if (p.row(y - 1) > p.row(y)) push_unique({p.row(y) + 1, y});
    push_unique({1, k + 1});
    return out;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.height() > outer.height()) return false;
    for (long long y = 1; y <= inner.height(); ++y)
        if (inner.row(y) > outer.row(y)) return false;
    return true;
}

Partition staircase(long long k) {
    if (k < 0) throw std::invalid_argument("staircase height must be nonnegative");
    std::vector<long long> parts;
    parts.reserve(static_cast<size_t>(k));
    for (long long v = k; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
}

Partition bounding_partition(long long h, long long l) {
    if (h < 1 || l < 1) throw std::invalid_argument("bounding_partition needs positive box sides");
    std::vector<long long> parts;
    parts.reserve(static_cast<size_t>(h));
    for (long long j = 1; j <= h; ++j) {
        long long num = l * (j - 1) + 1;
        parts.push_back(l + 1 - (num + h - 1) / h);
    }
    return Partition(std::move(parts));
}

WideTall classify_wide_tall(const Partition& p) {
    if (p.empty()) return {true, true};
    bool wide = true;
    for (long long y = 1; y < p.height(); ++y)
        if (p.row(y) == p.row(y + 1)) { wide = false; break; }
    // Conjugate has distinct parts iff every value in [1, width) occurs as a
    // part, i.e. consecutive differences are at most 1 and the last part is 1.
    bool tall;
    if (p.width() == 1) {
        tall = true;
    } else {
        tall = p.row(p.height()) == 1;
        for (long long y = 1; tall && y < p.height(); ++y)
            if (p.row(y) - p.row(y + 1) > 1) tall = false;
    }
    return {wide, tall};
}

} // namespace tripart
