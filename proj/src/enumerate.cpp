#include "tripart/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tripart/hull.hpp"

namespace tripart {

namespace {

using i128 = __int128;

long long checked_ll(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return static_cast<long long>(v);
}

long long isqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Descending-part enumeration of all partitions of n.
template <typename F>
void partitions_rec(long long remaining, long long max_part, std::vector<long long>& cur, F&& f) {
    if (remaining == 0) {
        f(Partition(cur));
        return;
    }
    for (long long part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, f);
        cur.pop_back();
    }
}

// ---------------------------------------------------------------------
// Balanced-word DFS engine.
//
// Words are grown letter by letter with O(len) balance bookkeeping. A
// word w of length len with at least one zero stands for the family of
// triangular partitions xi(m, d, w); their sizes are
//     tri*d + wsum + (len+1)*m,  tri = len*(len+1)/2,  wsum = sum i*w_i,
// scanned in (d, m) order with the early exits. Each valid triple counts
// the partition and its conjugate, except the staircase (m = d = 1,
// all-zero word) which is self-conjugate.

struct WordState {
    std::string word;
    std::vector<long long> suffix{0};  // ones in the last h letters, h = 0..len
    std::vector<long long> min_ones;   // per factor length h = 1..len
    std::vector<char> both_seen;
    long long wsum = 0;

    long long len() const { return static_cast<long long>(word.size()); }
    long long ones() const { return suffix.back(); }

    bool can_push(int bit) const {
        long long n = len();
        for (long long h = 1; h <= n; ++h) {
            long long c = suffix[static_cast<size_t>(h - 1)] + bit;
            long long mn = min_ones[static_cast<size_t>(h - 1)];
            if (both_seen[static_cast<size_t>(h - 1)]) {
                if (c < mn || c > mn + 1) return false;
            } else {
                if (c < mn - 1 || c > mn + 1) return false;
            }
        }
        return true;
    }

    // Journal of (index, old_min, old_both) per push, for O(changes) undo.
    struct Undo {
        long long h;
        long long old_min;
        char old_both;
    };
    std::vector<Undo> journal;
    std::vector<size_t> marks;

    void push(int bit) {
        long long n = len();
        marks.push_back(journal.size());
        for (long long h = 1; h <= n; ++h) {
            long long c = suffix[static_cast<size_t>(h - 1)] + bit;
            long long& mn = min_ones[static_cast<size_t>(h - 1)];
            char& both = both_seen[static_cast<size_t>(h - 1)];
            if (c == mn - 1) {
                journal.push_back({h, mn, both});
                mn = c;
                both = 1;
            } else if (c == mn + 1 && !both) {
                journal.push_back({h, mn, both});
                both = 1;
            }
        }
        suffix.push_back(0);
        for (long long h = n + 1; h >= 1; --h)
            suffix[static_cast<size_t>(h)] = suffix[static_cast<size_t>(h - 1)] + bit;
        min_ones.push_back(suffix.back());
        both_seen.push_back(0);
        wsum += (n + 1) * bit;
        word.push_back(static_cast<char>('0' + bit));
    }

    void pop() {
        int bit = word.back() - '0';
        word.pop_back();
        long long n = len();
        wsum -= (n + 1) * bit;
        for (long long h = 1; h <= n + 1; ++h)
            suffix[static_cast<size_t>(h - 1)] = suffix[static_cast<size_t>(h)] - bit;
        suffix.pop_back();
        min_ones.pop_back();
        both_seen.pop_back();
        size_t mark = marks.back();
        marks.pop_back();
        while (journal.size() > mark) {
            const Undo& u = journal.back();
            min_ones[static_cast<size_t>(u.h - 1)] = u.old_min;
            both_seen[static_cast<size_t>(u.h - 1)] = u.old_both;
            journal.pop_back();
        }
    }
};

struct DfsDriver {
    long long N;
    long long max_len;

    long long min_child_size(const WordState& s, int bit) const {
        long long lc = s.len() + 1;
        long long wsum_c = s.wsum + lc * bit;
        return lc * (lc + 1) / 2 + wsum_c + (lc + 1);
    }

    void scan_triples(const WordState& s, std::vector<long long>& counts) const {
        long long len = s.len();
        if (len == 0 || s.ones() == len) return;  // need a zero
        long long k = len + 1;
        long long tri = len * (len + 1) / 2;
        bool w1ok = s.can_push(1);
        bool allzero = s.ones() == 0;
        for (long long d = 1;; ++d) {
            long long first = tri * d + s.wsum + k;  // m = 1
            if (first > N) break;
            long long mcap = d + (w1ok ? 1 : 0);
            for (long long m = 1; m <= mcap; ++m) {
                long long n = first + k * (m - 1);
                if (n > N) break;
                counts[static_cast<size_t>(n)] += (allzero && d == 1 && m == 1) ? 1 : 2;
            }
        }
    }

    void visit(WordState& s, std::vector<long long>& counts) const {
        scan_triples(s, counts);
        if (s.len() == max_len) return;
        for (int bit : {0, 1}) {
            if (min_child_size(s, bit) > N) continue;
            if (!s.can_push(bit)) continue;
            s.push(bit);
            visit(s, counts);
            s.pop();
        }
    }

    // Explore down to the frontier depth, scanning shallow nodes and
    // snapshotting frontier states for the parallel phase.
    void collect(WordState& s, long long frontier, std::vector<long long>& counts,
                 std::vector<WordState>& tasks) const {
        if (s.len() == frontier) {
            tasks.push_back(s);
            return;
        }
        scan_triples(s, counts);
        for (int bit : {0, 1}) {
            if (min_child_size(s, bit) > N) continue;
            if (!s.can_push(bit)) continue;
            s.push(bit);
            collect(s, frontier, counts, tasks);
            s.pop();
        }
    }
};

void add_trivial_families(std::vector<long long>& counts, long long N) {
    counts[0] += 1;  // empty partition
    if (N >= 1) counts[1] += 1;
    for (long long n = 2; n <= N; ++n) counts[static_cast<size_t>(n)] += 2;  // (n) and 1^n
}

// Shared loop skeleton of the two generating-function counters. For each
// primitive ray (a, b) and offsets (i, j), base(k) is the size with m = 0;
// `emit` receives (base(k), k) while base(k) + m_lo stays within N.
template <typename Emit>
void ray_scan(long long N, Emit&& emit) {
    for (long long a = 1; a + 1 <= N; ++a) {
        for (long long b = 1; (a + 1) * (b + 1) / 2 <= N; ++b) {
            if (std::gcd(a, b) != 1) continue;
            long long half = (a + 1) * (b + 1) / 2 - 1;
            long long t_j = 0;  // T(a, b, j)
            for (long long j = 0; j < a; ++j) {
                if (j > 0) t_j += (j * b) / a + 1;
                if (half + j * b + t_j + 1 > N) break;
                long long t_i = 0;  // T(b, a, i)
                for (long long i = 0; i < b; ++i) {
                    if (i > 0) t_i += (i * a) / b + 1;
                    // base(k) = (k-1)(half + i a + j b) + C(k-1,2) ab + ij + Tj + Ti
                    long long lin = half + i * a + j * b;
                    long long base = lin + i * j + t_j + t_i;  // k = 2
                    if (base + 1 > N) break;
                    for (long long k = 2; base + 1 <= N; ++k) {
                        emit(base, k);
                        base += lin + (k - 1) * a * b;
                    }
                }
            }
        }
    }
}

} // namespace

long long n_delta(long long a, long long b, long long k, long long m, long long i, long long j) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("n_delta: (a, b) must be coprime positive integers");
    if (j < 0 || j >= a || i < 0 || i >= b)
        throw std::invalid_argument("n_delta: offsets need 0 <= j < a, 0 <= i < b");
    if (k < 1 || m < 1 || m > k) throw std::invalid_argument("n_delta: needs 1 <= m <= k");
    auto tsum = [](long long a_, long long b_, long long j_) {
        i128 total = 0;
        for (long long r = 1; r <= j_; ++r) total += (r * b_) / a_ + 1;
        return total;
    };
    i128 total = i128(k - 1) * ((i128(a + 1) * (b + 1)) / 2 - 1);
    total += i128(k - 1) * (k - 2) / 2 * a * b;
    total += i128(i) * j;
    total += i128(i) * (k - 1) * a;
    total += i128(j) * (k - 1) * b;
    total += tsum(a, b, j) + tsum(b, a, i) + m;
    return checked_ll(total, "n_delta overflow");
}

CountSeries count_delta_gf(long long N) {
    if (N < 1) throw std::invalid_argument("count_delta_gf: N must be positive");
    if (N > 2000) throw std::length_error("count_delta_gf: N above the guard of 2000");
    CountSeries out{"delta", std::vector<long long>(static_cast<size_t>(N) + 1, 1)};
    // The all-ones start covers the 1/(1-z) term: the empty partition and
    // the single-part family.
    ray_scan(N, [&](long long base, long long k) {
        for (long long m = 1; m < k && base + m <= N; ++m)
            out.values[static_cast<size_t>(base + m)] += 1;
    });
    return out;
}

CountSeries count_delta2(long long N) {
    if (N < 1) throw std::invalid_argument("count_delta2: N must be positive");
    if (N > 2000) throw std::length_error("count_delta2: N above the guard of 2000");
    CountSeries out{"delta2", std::vector<long long>(static_cast<size_t>(N) + 1, 0)};
    ray_scan(N, [&](long long base, long long k) {
        if (base + k <= N) out.values[static_cast<size_t>(base + k)] += 1;
    });
    return out;
}

CountSeries count_delta_brute(long long N) {
    if (N < 1) throw std::invalid_argument("count_delta_brute: N must be positive");
    if (N > 40) throw std::length_error("count_delta_brute: N above the guard of 40");
    CountSeries out{"delta", std::vector<long long>(static_cast<size_t>(N) + 1, 0)};
    out.values[0] = 1;
    std::vector<long long> cur;
    for (long long n = 1; n <= N; ++n)
        partitions_rec(n, n, cur, [&](const Partition& p) {
            if (is_triangular_reference(p)) out.values[static_cast<size_t>(n)] += 1;
        });
    return out;
}

CountSeries count_delta_dfs(long long N, int threads) {
    if (N < 1) throw std::invalid_argument("count_delta_dfs: N must be positive");
    if (threads < 1) throw std::invalid_argument("count_delta_dfs: needs at least one thread");

    DfsDriver driver{N, isqrt(2 * N)};
    std::vector<long long> counts(static_cast<size_t>(N) + 1, 0);
    add_trivial_families(counts, N);

    constexpr long long kFrontier = 8;
    WordState root;
#ifdef _OPENMP
    bool parallel = threads > 1 && driver.max_len > kFrontier;
#else
    bool parallel = false;
#endif
    if (!parallel) {
        driver.visit(root, counts);
    } else {
#ifdef _OPENMP
        std::vector<WordState> tasks;
        driver.collect(root, kFrontier, counts, tasks);
#pragma omp parallel num_threads(threads)
        {
            std::vector<long long> local(static_cast<size_t>(N) + 1, 0);
#pragma omp for schedule(dynamic, 1)
            for (size_t t = 0; t < tasks.size(); ++t) {
                WordState state = tasks[t];
                driver.visit(state, local);
            }
#pragma omp critical
            for (size_t n = 0; n < counts.size(); ++n) counts[n] += local[n];
        }
#endif
    }
    return CountSeries{"delta", std::move(counts)};
}

DerivedClasses derive_class_series(const CountSeries& delta, const CountSeries& delta2) {
    long long n_max = std::min(delta.max_n(), delta2.max_n()) - 1;
    if (n_max < 0) throw std::invalid_argument("derive_class_series: series too short");
    auto make = [&](const char* label) {
        return CountSeries{label, std::vector<long long>(static_cast<size_t>(n_max) + 1, 0)};
    };
    DerivedClasses out{make("delta1"), make("delta_up1"), make("delta_up2"), make("delta2_up2")};
    out.up1.values[0] = 1;  // the empty partition has exactly one addable cell
    for (long long n = 1; n <= n_max; ++n) {
        long long d = delta.at(n), d2 = delta2.at(n);
        long long d1 = d - d2;
        long long up2 = delta.at(n + 1) + delta2.at(n + 1) - d;
        long long up1 = d - up2;
        long long d2up2 = d2 - up1;
        if (d1 < 0 || up2 < 0 || up1 < 0 || d2up2 < 0)
            throw std::invalid_argument("derive_class_series: inconsistent input series");
        out.d1.values[static_cast<size_t>(n)] = d1;
        out.up2.values[static_cast<size_t>(n)] = up2;
        out.up1.values[static_cast<size_t>(n)] = up1;
        out.d2up2.values[static_cast<size_t>(n)] = d2up2;
    }
    return out;
}

DirectClasses classify_direct(long long n) {
    if (n < 1) throw std::invalid_argument("classify_direct: n must be positive");
    if (n > 40) throw std::length_error("classify_direct: n above the guard of 40");
    DirectClasses out;
    std::vector<long long> cur;
    partitions_rec(n, n, cur, [&](const Partition& p) {
        auto rep = check_triangular(p);
        if (!rep.triangular) return;
        (rep.removable.size() == 1 ? out.d1 : out.d2) += 1;
        (rep.addable.size() == 1 ? out.up1 : out.up2) += 1;
        if (rep.removable.size() == 2 && rep.addable.size() == 2) out.d2up2 += 1;
    });
    return out;
}

PhiQuad phi_map(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("phi_map: empty partition");
    auto rep = check_triangular(p);
    if (!rep.triangular) throw std::invalid_argument("phi_map: partition is not triangular");
    if (p.width() == 1) throw std::invalid_argument("phi_map: all-ones partitions are excluded");

    Cell c = rep.removable.back();  // rightmost removable cell
    long long a = c.x, b = c.y;
    if (a < 2) throw std::logic_error("phi_map: rightmost removable cell in column 1");
    Partition conj = conjugate(p);

    // Smallest escape slope e/d with (a - d, b + e) outside the diagram;
    // the first minimizer in d order is the primitive one.
    long long bd = 1, be = conj.row(a - 1) - b + 1;
    for (long long d = 2; d < a; ++d) {
        long long e = conj.row(a - d) - b + 1;
        if (i128(e) * bd < i128(be) * d) { bd = d; be = e; }
    }
    if (std::gcd(bd, be) != 1) throw std::logic_error("phi_map: non-primitive escape direction");
    return {a, b, bd, be};
}

Partition phi_inv(const PhiQuad& q) {
    if (q.a < 1 || q.b < 1 || q.d < 1 || q.e < 1 || q.d >= q.a || std::gcd(q.d, q.e) != 1)
        throw std::invalid_argument("phi_inv: quad needs d < a and gcd(d, e) = 1");
    long long c = checked_ll(i128(q.e) * q.a + i128(q.d) * q.b, "phi_inv overflow");
    std::vector<long long> parts;
    for (long long y = 1;; ++y) {
        long long room = c - q.d * y;
        long long part = (room - 1) / q.e;  // strictly below the line
        if (room >= 1 && room % q.e == 0 && room / q.e >= q.a)
            part = std::max(part, room / q.e);  // on the line, right of (a, b)
        if (part < 1) break;
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

TriangleCounts triangle_counts(long long d, long long e, long long l) {
    if (d < 1 || e < 1 || l < 1) throw std::invalid_argument("triangle_counts: positive inputs only");
    TriangleCounts out;
    for (long long x = d + 1;; ++x) {
        long long ymax = (e + d * (l + 1) - e * x) / d;  // e*x + d*y <= e + d*(l+1)
        if (ymax < 1) break;
        out.less += ymax;
    }
    for (long long x = d + 1;; ++x) {
        long long ymax = (e * (l + 1) + d - e * x - 1) / d;  // strict
        if (ymax < 1) break;
        out.geq += ymax;
    }
    return out;
}

long long square_count(long long l) {
    if (l < 0) throw std::invalid_argument("square_count: negative side");
    auto phi = totient_sieve(l);
    i128 total = 1;
    for (long long i = 1; i <= l; ++i)
        total += i128(l - i + 2) * (l - i + 1) / 2 * phi[static_cast<size_t>(i)];
    return checked_ll(total, "square_count overflow");
}

RectCounts rect_counts(long long l) {
    if (l < 1) throw std::invalid_argument("rect_counts: l must be positive");
    auto phi = totient_sieve(l);
    RectCounts out;

    i128 width_exact2 = 1;  // 2 * (count of width exactly l, height <= l) = |B_l|
    for (long long i = 1; i <= l; ++i)
        width_exact2 += i128(l - i + 1) * phi[static_cast<size_t>(i)];
    out.width_exact = checked_ll(width_exact2 / 2, "rect_counts overflow");

    if (l >= 2) {
        i128 m1 = 1;
        for (long long i = 1; i <= l; ++i)
            m1 += i128(l - i + 1) * (l - i + 1) * phi[static_cast<size_t>(i)];
        out.minus1 = checked_ll(m1 / 2, "rect_counts overflow");
        out.narrow_tall = l - 1;
    }
    if (l >= 3) {
        i128 m2 = 0;
        for (long long i = 1; i <= l; ++i)
            m2 += (i128(l - i + 1) * (l - i) + 1) * phi[static_cast<size_t>(i)];
        out.minus2 = checked_ll(1 - l + m2 / 2, "rect_counts overflow");
    }
    return out;
}

std::vector<long long> totient_sieve(long long limit) {
    if (limit < 0) throw std::invalid_argument("totient_sieve: negative limit");
    std::vector<long long> phi(static_cast<size_t>(limit) + 1, 0);
    if (limit >= 1) phi[1] = 1;
    std::vector<long long> primes;
    for (long long i = 2; i <= limit; ++i) {
        if (phi[static_cast<size_t>(i)] == 0) {
            phi[static_cast<size_t>(i)] = i - 1;
            primes.push_back(i);
        }
        for (long long p : primes) {
            if (i * p > limit) break;
            if (i % p == 0) {
                phi[static_cast<size_t>(i * p)] = phi[static_cast<size_t>(i)] * p;
                break;
            }
            phi[static_cast<size_t>(i * p)] = phi[static_cast<size_t>(i)] * (p - 1);
        }
    }
    return phi;
}

long long coprime_pair_count(long long m) {
    if (m < 0) throw std::invalid_argument("coprime_pair_count: negative bound");
    if (m <= 1) return 0;
    long long cap = m - 1;  // count pairs with a*b <= cap

    // Mobius sieve up to sqrt(cap), then pp = sum mu(d) * D(cap / d^2)
    // with D the divisor summatory function (hyperbola method).
    long long root = isqrt(cap);
    std::vector<int> mu(static_cast<size_t>(root) + 1, 1);
    std::vector<bool> comp(static_cast<size_t>(root) + 1, false);
    std::vector<long long> primes;
    for (long long i = 2; i <= root; ++i) {
        if (!comp[static_cast<size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<size_t>(i)] = -1;
        }
        for (long long p : primes) {
            if (i * p > root) break;
            comp[static_cast<size_t>(i * p)] = true;
            if (i % p == 0) {
                mu[static_cast<size_t>(i * p)] = 0;
                break;
            }
            mu[static_cast<size_t>(i * p)] = -mu[static_cast<size_t>(i)];
        }
    }
    auto divisor_sum = [](long long x) {
        i128 total = 0;
        long long r = isqrt(x);
        for (long long a = 1; a <= r; ++a) total += x / a;
        return 2 * total - i128(r) * r;
    };
    i128 total = 0;
    for (long long d = 1; d * d <= cap; ++d)
        if (mu[static_cast<size_t>(d)] != 0)
            total += i128(mu[static_cast<size_t>(d)]) * divisor_sum(cap / (d * d));
    return checked_ll(total, "coprime_pair_count overflow");
}

} // namespace tripart
