#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "tripart/lattice.hpp"

using namespace tripart;

namespace {

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

std::vector<Partition> triangular_subpartitions(const Partition& p,
                                                const std::vector<Partition>& pool) {
    std::vector<Partition> out;
    for (const auto& t : pool)
        if (t.size() <= p.size() && contains(p, t)) out.push_back(t);
    return out;
}

} // namespace

TEST_CASE("covers_down examples") {
    CHECK(covers_down(parse_partition("1")) == std::vector<Partition>{Partition{}});
    CHECK(as_set(covers_down(parse_partition("2,1"))) ==
          std::set<Partition>{parse_partition("1,1"), parse_partition("2")});
    CHECK(covers_down(parse_partition("6,5,4,2,1")) ==
          std::vector<Partition>{parse_partition("6,5,3,2,1")});
    CHECK(covers_down(Partition{}).empty());
    CHECK_THROWS_AS(covers_down(parse_partition("2,2")), std::invalid_argument);
}

TEST_CASE("covers_up examples") {
    CHECK(covers_up(Partition{}) == std::vector<Partition>{parse_partition("1")});
    CHECK(as_set(covers_up(parse_partition("1"))) ==
          std::set<Partition>{parse_partition("2"), parse_partition("1,1")});
    CHECK(as_set(covers_up(parse_partition("7,5,4,2,1"))) ==
          std::set<Partition>{parse_partition("7,5,4,3,1"), parse_partition("7,6,4,2,1")});
}

TEST_CASE("covers are exactly the one-cell-different triangular partitions") {
    auto tri = testutil::triangular_partitions_up_to(14);
    for (const auto& p : tri) {
        std::set<Partition> down_expected;
        for (const auto& q : tri)
            if (q.size() + 1 == p.size() && contains(p, q)) down_expected.insert(q);
        CHECK(as_set(covers_down(p)) == down_expected);
    }
}

TEST_CASE("join worked example and identities") {
    CHECK(join(parse_partition("8,6,5,3,1"), parse_partition("4,3,3,3,2,2,1,1,1")) ==
          parse_partition("8,7,6,5,4,3,2,1,1"));
    Partition p = parse_partition("6,5,3,2,1");
    CHECK(join(p, Partition{}) == p);
    CHECK(join(p, p) == p);
    CHECK_THROWS_AS(join(parse_partition("2,2"), p), std::invalid_argument);
}

TEST_CASE("meet worked examples") {
    Partition p = parse_partition("8,6,5,3,1");
    CHECK(meet(p, p) == p);
    CHECK(meet(p, Partition{}) == Partition{});
    CHECK(meet(parse_partition("2"), parse_partition("1,1")) == parse_partition("1"));
}

TEST_CASE("join and meet are the lattice bounds") {
    auto tri = testutil::triangular_partitions_up_to(10);
    long long max_join = 0;
    std::vector<std::pair<Partition, Partition>> joins;
    for (const auto& p : tri)
        for (const auto& q : tri) {
            Partition j = join(p, q);
            Partition m = meet(p, q);
            CHECK(check_triangular(j).triangular);
            CHECK(check_triangular(m).triangular);
            CHECK(contains(j, p));
            CHECK(contains(j, q));
            CHECK(contains(p, m));
            CHECK(contains(q, m));
            CHECK(join(q, p) == j);
            CHECK(meet(q, p) == m);
            CHECK(join(p, m) == p);   // absorption
            CHECK(meet(p, j) == p);
            max_join = std::max(max_join, j.size());
            joins.push_back({j, m});
        }
    // Minimality/maximality against every triangular candidate.
    auto pool = testutil::triangular_partitions_up_to(max_join);
    size_t idx = 0;
    for (const auto& p : tri)
        for (const auto& q : tri) {
            const auto& [j, m] = joins[idx++];
            for (const auto& r : pool) {
                if (contains(r, p) && contains(r, q)) CHECK(contains(r, j));
                if (r.size() <= std::min(p.size(), q.size()) && contains(p, r) && contains(q, r))
                    CHECK(contains(m, r));
            }
        }
}

TEST_CASE("join and meet are associative") {
    auto tri = testutil::triangular_partitions_up_to(7);
    for (const auto& p : tri)
        for (const auto& q : tri)
            for (const auto& r : tri) {
                CHECK(join(join(p, q), r) == join(p, join(q, r)));
                CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
            }
}

TEST_CASE("mobius examples") {
    Partition e{}, one = parse_partition("1"), two_one = parse_partition("2,1");
    CHECK(mobius(two_one, two_one) == 1);
    CHECK(mobius(one, two_one) == 1);
    CHECK(mobius(e, two_one) == 0);
    CHECK(mobius(e, one) == -1);
    CHECK_THROWS_AS(mobius(parse_partition("3"), two_one), std::invalid_argument);
}

TEST_CASE("mobius_reference examples") {
    CHECK(mobius_reference(Partition{}, parse_partition("1")) == -1);
    CHECK(mobius_reference(parse_partition("1"), parse_partition("2,1")) == 1);
    CHECK(mobius_reference(Partition{}, parse_partition("3,1")) == 0);
}

TEST_CASE("mobius closed form matches the recursive sum on all small intervals") {
    auto tri = testutil::triangular_partitions_up_to(12);
    for (const auto& q : tri)
        for (const auto& p : tri) {
            if (p.size() > q.size() || !contains(q, p)) continue;
            int closed = mobius(p, q);
            CHECK(closed >= -1);
            CHECK(closed <= 1);
            CHECK(closed == mobius_reference(p, q));
        }
}

TEST_CASE("mobius sums to zero over proper intervals") {
    auto tri = testutil::triangular_partitions_up_to(12);
    for (const auto& q : tri)
        for (const auto& p : tri) {
            if (p == q || p.size() > q.size() || !contains(q, p)) continue;
            long long sum = 0;
            for (const auto& v : tri)
                if (contains(q, v) && v.size() >= p.size() && contains(v, p)) sum += mobius(p, v);
            CHECK(sum == 0);
        }
}

TEST_CASE("diagonal examples") {
    CHECK(diagonal(parse_partition("1")).cells == std::vector<Cell>{{1, 1}});
    CHECK(diagonal(parse_partition("2,1")).cells == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(diagonal(parse_partition("6,5,3,2,1")).cells == std::vector<Cell>{{1, 5}, {5, 2}});
}

TEST_CASE("interior examples") {
    CHECK(interior(parse_partition("1")) == Partition{});
    CHECK(interior(parse_partition("2,1")) == parse_partition("1"));
    CHECK(interior(parse_partition("3,1")) == parse_partition("2"));
}

TEST_CASE("intervals over the diagonal are 2k-gons") {
    for (const auto& p : testutil::triangular_partitions_up_to(16)) {
        if (p.empty()) continue;
        Partition inner = interior(p);
        CHECK(check_triangular(inner).triangular);
        long long segd = static_cast<long long>(diagonal(p).cells.size());
        if (segd < 2) continue;
        // Interval [interior(p), p]: count members per level.
        auto pool = testutil::triangular_partitions_up_to(p.size());
        std::vector<long long> per_level(static_cast<size_t>(segd) + 1, 0);
        long long total = 0;
        for (const auto& v : pool) {
            if (v.size() < inner.size() || !contains(v, inner) || !contains(p, v)) continue;
            per_level[static_cast<size_t>(v.size() - inner.size())] += 1;
            total += 1;
        }
        CHECK(total == 2 * segd);
        CHECK(per_level.front() == 1);
        CHECK(per_level.back() == 1);
        for (size_t lv = 1; lv + 1 < per_level.size(); ++lv) CHECK(per_level[lv] == 2);
    }
}

TEST_CASE("count_subpartitions examples and brute agreement") {
    CHECK(count_subpartitions(Partition{}) == 1);
    CHECK(count_subpartitions(staircase(2)) == 5);
    CHECK(count_subpartitions(staircase(6)) == 83);

    auto tri = testutil::triangular_partitions_up_to(18);
    for (const auto& p : tri) {
        long long brute = static_cast<long long>(triangular_subpartitions(p, tri).size());
        CHECK(count_subpartitions(p) == brute);
    }
}

TEST_CASE("count_subpartitions memo cap raises") {
    CHECK_THROWS_AS(count_subpartitions(staircase(8), 2), std::length_error);
}

TEST_CASE("two-row tableaux formula matches the lattice walker") {
    CHECK(tyt_count_two_row(2, 1) == 2);
    CHECK(tyt_count_two_row(3, 1) == 3);
    CHECK(tyt_count_two_row(5, 2) == 12);
    CHECK_THROWS_AS(tyt_count_two_row(4, 3), std::invalid_argument);

    for (long long t2 = 1; t2 <= 5; ++t2)
        for (long long t1 = 2 * t2 - 1; t1 + t2 <= 16; ++t1)
            CHECK(tyt_count_two_row(t1, t2) == tyt_count_brute(Partition({t1, t2})));
}

TEST_CASE("tableau walker basics and the 531 filling") {
    CHECK(tyt_count_brute(parse_partition("1")) == 1);
    CHECK(tyt_count_brute(parse_partition("3,1")) == 3);
    CHECK(tyt_count_brute(parse_partition("5,3,1")) >= 1);
    CHECK_THROWS_AS(tyt_count_brute(staircase(6)), std::length_error);

    // The worked 531 filling is a valid chain: every prefix is triangular.
    std::vector<Cell> order{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {2, 2}, {1, 3}, {4, 1}, {3, 2}, {5, 1}};
    std::vector<long long> rows(3, 0);
    for (const Cell& c : order) {
        rows[static_cast<size_t>(c.y - 1)] += 1;
        CHECK(rows[static_cast<size_t>(c.y - 1)] == c.x);  // cells added at row ends
        std::vector<long long> parts;
        for (long long r : rows)
            if (r > 0) parts.push_back(r);
        CHECK(is_triangular_reference(Partition(parts)));
    }
    CHECK(rows == std::vector<long long>{5, 3, 1});
}

TEST_CASE("join-irreducible elements are those with a single removable cell") {
    auto tri = testutil::triangular_partitions_up_to(14);
    for (const auto& p : tri) {
        if (p.empty()) continue;
        bool single_cover = covers_down(p).size() == 1;
        bool is_proper_join = false;
        auto subs = triangular_subpartitions(p, tri);
        for (const auto& r : subs)
            for (const auto& s : subs) {
                if (r == p || s == p) continue;
                if (join(r, s) == p) is_proper_join = true;
            }
        CHECK(single_cover == !is_proper_join);
    }
}
