#include "tripart/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "tripart/enumerate.hpp"
#include "tripart/hull.hpp"

namespace tripart {

namespace {

constexpr long long kCoordLimit = 1LL << 31;

void require_word(const BinaryWord& w) {
    for (char c : w)
        if (c != '0' && c != '1') throw std::invalid_argument("binary word must be over 0/1");
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("word arithmetic overflow");
    return r;
}

void validate_triple(const ChiTriple& t) {
    require_word(t.w);
    if (t.m < 1 || t.d < 1) throw std::invalid_argument("chi triple needs positive m and d");
    if (t.w.empty()) throw std::invalid_argument("chi triple needs a nonempty word");
    if (t.w.find('0') == BinaryWord::npos)
        throw std::invalid_argument("chi triple word must contain a zero");
    if (t.m > t.d + 1) throw std::invalid_argument("chi triple needs m <= d + 1");
    if (!is_balanced(t.w)) throw std::invalid_argument("chi triple word is not balanced");
    if (t.m == t.d + 1 && !is_balanced(t.w + '1'))
        throw std::invalid_argument("chi triple with m = d + 1 needs w1 balanced");
}

} // namespace

std::optional<BalanceState> extend_state(const BalanceState& s, int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
    long long len = s.length();
    // The only new factor of each length h <= len is the suffix ending in
    // `bit`; it must keep the one-counts within {a, a+1}.
    for (long long h = 1; h <= len; ++h) {
        long long c = s.suffix_ones_[static_cast<size_t>(h - 1)] + bit;
        long long mn = s.min_ones_[static_cast<size_t>(h - 1)];
        bool both = s.both_seen_[static_cast<size_t>(h - 1)];
        if (both) {
            if (c < mn || c > mn + 1) return std::nullopt;
        } else {
            if (c < mn - 1 || c > mn + 1) return std::nullopt;
        }
    }
    BalanceState out = s;
    for (long long h = 1; h <= len; ++h) {
        long long c = out.suffix_ones_[static_cast<size_t>(h - 1)] + bit;
        long long& mn = out.min_ones_[static_cast<size_t>(h - 1)];
        char& both = out.both_seen_[static_cast<size_t>(h - 1)];
        if (c == mn - 1) { mn = c; both = 1; }
        else if (c == mn + 1) both = 1;
    }
    out.suffix_ones_.push_back(0);
    for (long long h = len + 1; h >= 1; --h)
        out.suffix_ones_[static_cast<size_t>(h)] =
            out.suffix_ones_[static_cast<size_t>(h - 1)] + bit;
    out.min_ones_.push_back(out.suffix_ones_.back());
    out.both_seen_.push_back(0);
    out.weighted_ += (len + 1) * bit;
    out.word_.push_back(static_cast<char>('0' + bit));
    return out;
}

BalanceState state_of(const BinaryWord& w) {
    require_word(w);
    BalanceState s;
    for (char c : w) {
        auto next = extend_state(s, c - '0');
        if (!next) throw std::invalid_argument("state_of: word is not balanced");
        s = std::move(*next);
    }
    return s;
}

bool is_balanced_naive(const BinaryWord& w) {
    require_word(w);
    long long n = static_cast<long long>(w.size());
    std::vector<long long> pre(static_cast<size_t>(n) + 1, 0);
    for (long long i = 0; i < n; ++i)
        pre[static_cast<size_t>(i + 1)] = pre[static_cast<size_t>(i)] + (w[static_cast<size_t>(i)] - '0');
    for (long long h = 1; h <= n; ++h) {
        long long lo = n, hi = 0;
        for (long long i = 0; i + h <= n; ++i) {
            long long ones = pre[static_cast<size_t>(i + h)] - pre[static_cast<size_t>(i)];
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

bool is_balanced(const BinaryWord& w) {
    require_word(w);
    if (w.empty()) return true;
    // Complementation preserves balance; normalize so the word starts
    // with a one, then read off a partition and test triangularity.
    char one = w.front();
    std::vector<long long> parts;
    long long len = static_cast<long long>(w.size());
    for (long long i = 0; i < len; ++i)
        if (w[static_cast<size_t>(i)] == one) parts.push_back(len - i);
    return check_triangular(Partition(std::move(parts))).triangular;
}

BinaryWord mechanical_word(const Fraction& alpha, const Fraction& beta, long long len) {
    if (len < 0) throw std::invalid_argument("mechanical_word: negative length");
    Fraction zero(0, 1), one(1, 1);
    if (!(zero < alpha && alpha < one && zero < beta && beta < one))
        throw std::invalid_argument("mechanical_word: parameters must lie in (0, 1)");
    auto floor_at = [&](long long i) {
        __int128 num = __int128(i) * alpha.num() * beta.den() + __int128(beta.num()) * alpha.den();
        __int128 den = __int128(alpha.den()) * beta.den();
        __int128 q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    };
    BinaryWord w;
    w.reserve(static_cast<size_t>(len));
    __int128 prev = floor_at(0);
    for (long long i = 1; i <= len; ++i) {
        __int128 cur = floor_at(i);
        w.push_back(static_cast<char>('0' + static_cast<int>(cur - prev)));
        prev = cur;
    }
    return w;
}

BinaryWord omega(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("omega: empty partition");
    auto wt = classify_wide_tall(p);
    if (!wt.wide || !check_triangular(p).triangular)
        throw std::invalid_argument("omega: needs a wide triangular partition");
    BinaryWord w;
    w.reserve(static_cast<size_t>(p.width()));
    long long k = p.height();
    for (long long j = 1; j <= k; ++j) {
        long long gap = (j < k ? p.row(j) - p.row(j + 1) : p.row(k)) - 1;
        w.push_back('1');
        w.append(static_cast<size_t>(gap), '0');
    }
    return w;
}

Partition omega_inv(const BinaryWord& w) {
    require_word(w);
    if (w.empty() || w.front() != '1')
        throw std::invalid_argument("omega_inv: word must start with 1");
    if (!is_balanced(w)) throw std::invalid_argument("omega_inv: word is not balanced");
    long long len = static_cast<long long>(w.size());
    std::vector<long long> parts;
    for (long long i = 0; i < len; ++i)
        if (w[static_cast<size_t>(i)] == '1') parts.push_back(len - i);
    return Partition(std::move(parts));
}

ChiTriple chi(const Partition& p) {
    if (p.height() < 2) throw std::invalid_argument("chi: needs at least two parts");
    auto wt = classify_wide_tall(p);
    if (!wt.wide || !check_triangular(p).triangular)
        throw std::invalid_argument("chi: needs a wide triangular partition");
    long long k = p.height();
    long long d = p.row(1) - p.row(2);
    for (long long j = 2; j < k; ++j) d = std::min(d, p.row(j) - p.row(j + 1));
    ChiTriple t;
    t.m = p.row(k);
    t.d = d;
    t.w.reserve(static_cast<size_t>(k - 1));
    for (long long j = 1; j < k; ++j)
        t.w.push_back(static_cast<char>('0' + (p.row(j) - p.row(j + 1) - d)));
    return t;
}

Partition xi(const ChiTriple& t) {
    validate_triple(t);
    long long k = static_cast<long long>(t.w.size()) + 1;
    std::vector<long long> parts(static_cast<size_t>(k));
    parts[static_cast<size_t>(k - 1)] = t.m;
    for (long long i = k - 1; i >= 1; --i) {
        long long step = checked_add(t.d, t.w[static_cast<size_t>(i - 1)] - '0');
        parts[static_cast<size_t>(i - 1)] = checked_add(parts[static_cast<size_t>(i)], step);
    }
    if (parts.front() >= kCoordLimit)
        throw std::overflow_error("xi: parts exceed the coordinate limit");
    return Partition(std::move(parts));
}

long long chi_size(const ChiTriple& t) {
    validate_triple(t);
    long long k = static_cast<long long>(t.w.size()) + 1;
    __int128 total = __int128(k) * t.m + __int128(k) * (k - 1) / 2 * t.d;
    for (long long i = 1; i < k; ++i)
        total += __int128(i) * (t.w[static_cast<size_t>(i - 1)] - '0');
    if (total > INT64_MAX) throw std::overflow_error("chi_size overflow");
    return static_cast<long long>(total);
}

std::vector<Cell> removable_via_reduction(const Partition& p) {
    if (p.height() < 2) throw std::invalid_argument("removable_via_reduction: needs >= 2 parts");
    if (!check_triangular(p).triangular)
        throw std::invalid_argument("removable_via_reduction: partition is not triangular");

    auto wide_case = [](const Partition& t) -> std::vector<long long> {
        // Rows whose end cell is removable.
        if (t.height() == 1) return {1};
        ChiTriple enc = chi(t);
        ChiTriple small{enc.m - enc.d == 1 ? 2 : 1, 1, enc.w};
        Partition nu = xi(small);
        std::vector<long long> rows;
        for (const Cell& c : check_triangular(nu).removable) rows.push_back(c.y);
        return rows;
    };

    std::vector<Cell> out;
    if (classify_wide_tall(p).wide) {
        for (long long y : wide_case(p)) out.push_back({p.row(y), y});
    } else {
        Partition conj = conjugate(p);
        for (long long y : wide_case(conj)) out.push_back({y, conj.row(y)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long balanced_count_formula(long long len) {
    if (len < 0) throw std::invalid_argument("balanced_count_formula: negative length");
    auto phi = totient_sieve(len);
    long long total = 1;
    for (long long i = 1; i <= len; ++i) {
        long long term;
        if (__builtin_mul_overflow(len - i + 1, phi[static_cast<size_t>(i)], &term))
            throw std::overflow_error("balanced_count_formula overflow");
        total = checked_add(total, term);
    }
    return total;
}

std::vector<BinaryWord> balanced_enumerate(long long len) {
    if (len < 0) throw std::invalid_argument("balanced_enumerate: negative length");
    if (len > 30) throw std::length_error("balanced_enumerate: length above the guard of 30");
    std::vector<BinaryWord> out;
    auto rec = [&](auto&& self, const BalanceState& s) -> void {
        if (s.length() == len) {
            out.push_back(s.word());
            return;
        }
        for (int bit : {0, 1})
            if (auto next = extend_state(s, bit)) self(self, *next);
    };
    rec(rec, BalanceState{});
    return out;
}

} // namespace tripart
