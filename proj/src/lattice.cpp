#include "tripart/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tripart {

namespace {

using i128 = __int128;

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow");
    return r;
}

void require_triangular(const Partition& p, const char* who) {
    if (!check_triangular(p).triangular)
        throw std::invalid_argument(std::string(who) + ": partition is not triangular");
}

Partition remove_corner(const Partition& p, const Cell& c) {
    std::vector<long long> parts = p.parts();
    parts[static_cast<size_t>(c.y - 1)] -= 1;
    if (parts[static_cast<size_t>(c.y - 1)] == 0)
        parts.erase(parts.begin() + static_cast<long>(c.y - 1));
    return Partition(std::move(parts));
}

Partition add_complementary_corner(const Partition& p, const Cell& c) {
    std::vector<long long> parts = p.parts();
    if (c.y == p.height() + 1) parts.push_back(1);
    else parts[static_cast<size_t>(c.y - 1)] += 1;
    return Partition(std::move(parts));
}

} // namespace

std::vector<Partition> covers_down(const Partition& p) {
    auto rep = check_triangular(p);
    if (!rep.triangular) throw std::invalid_argument("covers_down: partition is not triangular");
    std::vector<Partition> out;
    for (const Cell& c : rep.removable) out.push_back(remove_corner(p, c));
    return out;
}

std::vector<Partition> covers_up(const Partition& p) {
    auto rep = check_triangular(p);
    if (!rep.triangular) throw std::invalid_argument("covers_up: partition is not triangular");
    std::vector<Partition> out;
    for (const Cell& c : rep.addable) out.push_back(add_complementary_corner(p, c));
    return out;
}

Partition join(const Partition& p, const Partition& q) {
    require_triangular(p, "join");
    require_triangular(q, "join");
    if (p.empty()) return q;
    if (q.empty()) return p;

    long long k = std::max(p.height(), q.height());
    // Concave envelope of the per-row maxima; every cell of either diagram
    // lies under it, so its lattice points are exactly Conv(union).
    struct Pt {
        long long row, val;
    };
    std::vector<Pt> env;
    for (long long y = 1; y <= k; ++y) {
        Pt pt{y, std::max(p.row(y), q.row(y))};
        while (env.size() >= 2) {
            const Pt& a = env[env.size() - 2];
            const Pt& b = env[env.size() - 1];
            i128 turn = i128(b.row - a.row) * (pt.val - b.val) -
                        i128(b.val - a.val) * (pt.row - b.row);
            if (turn < 0) break;
            env.pop_back();
        }
        env.push_back(pt);
    }

    std::vector<long long> parts(static_cast<size_t>(k));
    size_t seg = 0;
    for (long long y = 1; y <= k; ++y) {
        while (seg + 1 < env.size() && env[seg + 1].row < y) ++seg;
        if (seg + 1 == env.size()) {
            parts[static_cast<size_t>(y - 1)] = env[seg].val;
            continue;
        }
        const Pt& a = env[seg];
        const Pt& b = env[seg + 1];
        parts[static_cast<size_t>(y - 1)] =
            a.val + floor_div((b.val - a.val) * (y - a.row), b.row - a.row);
    }
    return Partition(std::move(parts));
}

Partition meet(const Partition& p, const Partition& q) {
    require_triangular(p, "meet");
    require_triangular(q, "meet");
    if (p.empty() || q.empty()) return Partition{};

    long long k = std::min(p.height(), q.height());
    std::vector<long long> common(static_cast<size_t>(k));
    for (long long y = 1; y <= k; ++y)
        common[static_cast<size_t>(y - 1)] = std::min(p.row(y), q.row(y));
    Partition rho(std::move(common));

    // Points strictly below the lower hull of the complement of rho.
    const auto chain = complement_hull(rho).vertices;
    if (chain.size() < 2) return Partition{};
    std::vector<long long> parts;
    size_t seg = 0;
    for (long long y = 1;; ++y) {
        while (seg + 1 < chain.size() && chain[seg + 1].y < y) ++seg;
        if (seg + 1 == chain.size()) break;
        const Cell& a = chain[seg];
        const Cell& b = chain[seg + 1];
        // Largest x with (x, y) strictly below segment a-b.
        long long part = a.x + ceil_div((b.x - a.x) * (y - a.y), b.y - a.y) - 1;
        if (part < 1) break;
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

int mobius(const Partition& p, const Partition& q) {
    require_triangular(p, "mobius");
    require_triangular(q, "mobius");
    if (!contains(q, p)) throw std::invalid_argument("mobius: first argument must be contained in second");
    if (p == q) return 1;
    if (q.size() == p.size() + 1) return -1;
    auto rep = check_triangular(q);
    if (rep.removable.size() == 2 && interior(q) == p) return 1;
    return 0;
}

long long mobius_reference(const Partition& p, const Partition& q) {
    require_triangular(p, "mobius_reference");
    require_triangular(q, "mobius_reference");
    if (!contains(q, p))
        throw std::invalid_argument("mobius_reference: first argument must be contained in second");
    if (q.size() - p.size() > 20)
        throw std::length_error("mobius_reference: interval rank above the guard of 20");

    // Enumerate the interval level by level; the lattice is ranked, so
    // repeated covers_up reaches everything.
    std::vector<std::vector<Partition>> levels{{p}};
    while (levels.back().front().size() < q.size()) {
        std::vector<Partition> next;
        for (const Partition& t : levels.back())
            for (const Partition& u : covers_up(t))
                if (contains(q, u) && std::find(next.begin(), next.end(), u) == next.end())
                    next.push_back(u);
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }

    std::map<Partition, long long> mu;
    mu[p] = 1;
    for (size_t lv = 1; lv < levels.size(); ++lv) {
        for (const Partition& nu : levels[lv]) {
            long long acc = 0;
            for (size_t below = 0; below < lv; ++below)
                for (const Partition& theta : levels[below])
                    if (contains(nu, theta)) acc += mu[theta];
            mu[nu] = -acc;
        }
    }
    auto it = mu.find(q);
    return it == mu.end() ? 0 : it->second;
}

Diagonal diagonal(const Partition& p) {
    auto rep = check_triangular(p);
    if (!rep.triangular || p.empty())
        throw std::invalid_argument("diagonal: needs a nonempty triangular partition");
    if (rep.removable.size() == 1) return {{rep.removable[0]}};
    Cell lo = rep.removable[0], hi = rep.removable[1];  // sorted by x
    long long dx = hi.x - lo.x, dy = hi.y - lo.y;
    long long g = std::gcd(dx, -dy);
    Diagonal d;
    for (long long t = 0; t <= g; ++t)
        d.cells.push_back({lo.x + t * (dx / g), lo.y + t * (dy / g)});
    return d;
}

Partition interior(const Partition& p) {
    if (p.empty()) return p;
    Diagonal d = diagonal(p);
    std::vector<long long> parts = p.parts();
    for (const Cell& c : d.cells) {
        // Diagonal cells end their rows, so each removal keeps a diagram.
        parts[static_cast<size_t>(c.y - 1)] -= 1;
    }
    std::erase(parts, 0LL);
    return Partition(std::move(parts));
}

long long count_subpartitions(const Partition& p, size_t memo_cap) {
    require_triangular(p, "count_subpartitions");
    std::map<std::vector<long long>, long long> memo;

    auto rec = [&](auto&& self, const Partition& t) -> long long {
        if (t.empty()) return 1;
        auto it = memo.find(t.parts());
        if (it != memo.end()) return it->second;

        auto rep = check_triangular(t);
        const Cell& left = rep.removable.front();
        const Cell& right = rep.removable.back();
        long long total = self(self, remove_corner(t, left));
        total = checked_add(total, self(self, remove_corner(t, right)));
        total -= self(self, interior(t));
        total = checked_add(total, 1);

        if (memo.size() >= memo_cap)
            throw std::length_error("count_subpartitions: memo cap exceeded");
        memo.emplace(t.parts(), total);
        return total;
    };
    return rec(rec, p);
}

long long tyt_count_two_row(long long t1, long long t2) {
    if (t2 < 1 || t1 < t2) throw std::invalid_argument("tyt_count_two_row: not a two-row shape");
    if (t1 < 2 * t2 - 1)
        throw std::invalid_argument("tyt_count_two_row: shape is not triangular");
    // (t1 - 2*t2 + 2) / (t1 + 2) * C(t1 + t2 + 1, t2), exact.
    i128 binom = 1;
    for (long long i = 1; i <= t2; ++i) {
        binom = binom * (t1 + t2 + 2 - i);
        binom /= i;  // exact: running product of i consecutive integers
        if (binom > i128(INT64_MAX) * (t1 + 2)) throw std::overflow_error("tyt_count_two_row overflow");
    }
    i128 num = binom * (t1 - 2 * t2 + 2);
    if (num % (t1 + 2) != 0) throw std::logic_error("tyt_count_two_row: non-integer result");
    num /= t1 + 2;
    if (num > INT64_MAX) throw std::overflow_error("tyt_count_two_row overflow");
    return static_cast<long long>(num);
}

long long tyt_count_brute(const Partition& p) {
    require_triangular(p, "tyt_count_brute");
    if (p.size() > 18) throw std::length_error("tyt_count_brute: size above the guard of 18");
    std::map<std::vector<long long>, long long> memo;
    auto rec = [&](auto&& self, const Partition& t) -> long long {
        if (t.empty()) return 1;
        auto it = memo.find(t.parts());
        if (it != memo.end()) return it->second;
        long long total = 0;
        for (const Cell& c : check_triangular(t).removable)
            total = checked_add(total, self(self, remove_corner(t, c)));
        memo.emplace(t.parts(), total);
        return total;
    };
    return rec(rec, p);
}

} // namespace tripart
