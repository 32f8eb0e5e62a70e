#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripart/fraction.hpp"
#include "tripart/partition.hpp"

namespace tripart {

/// Binary words are plain strings over '0'/'1'.
using BinaryWord = std::string;

/// Image of the (min, dif, wrd) encoding of a wide triangular partition
/// with at least two parts: smallest part, smallest consecutive
/// difference, and the word of difference excesses.
struct ChiTriple {
    long long m = 0;
    long long d = 0;
    BinaryWord w;
};

/// Incremental balance bookkeeping: per factor length, the smallest
/// one-count seen, whether both admissible counts occurred, and the
/// current suffix count. Extension is O(length); states are immutable.
class BalanceState {
public:
    BalanceState() = default;

    long long length() const { return static_cast<long long>(word_.size()); }
    const BinaryWord& word() const { return word_; }
    /// Weighted sum of one positions, sum of i*w_i.
    long long weighted_ones() const { return weighted_; }

    friend std::optional<BalanceState> extend_state(const BalanceState& s, int bit);

private:
    BinaryWord word_;
    std::vector<long long> suffix_ones_{0};  // ones in the last h letters, h = 0..len
    std::vector<long long> min_ones_;        // per factor length h = 1..len
    std::vector<char> both_seen_;
    long long weighted_ = 0;
};

/// State of a balanced word built letter by letter; throws if the word is
/// not balanced.
BalanceState state_of(const BinaryWord& w);

/// Absent when appending `bit` breaks the balance condition.
std::optional<BalanceState> extend_state(const BalanceState& s, int bit);

/// Quadratic window-count check, the definitional oracle.
bool is_balanced_naive(const BinaryWord& w);

/// Balance test by reduction to triangularity of the partition read off
/// the positions matching the first letter.
bool is_balanced(const BinaryWord& w);

/// w_i = floor(i*alpha + beta) - floor((i-1)*alpha + beta); requires
/// 0 < alpha < 1 and 0 < beta < 1.
BinaryWord mechanical_word(const Fraction& alpha, const Fraction& beta, long long len);

/// Encodes a wide triangular partition as the balanced word whose ones sit
/// at the column offsets of the parts; length = width, ones = height.
BinaryWord omega(const Partition& p);
Partition omega_inv(const BinaryWord& w);

ChiTriple chi(const Partition& p);
Partition xi(const ChiTriple& t);

/// |xi(t)| without materializing the partition.
long long chi_size(const ChiTriple& t);

/// Removable cells located through the small companion partition sharing
/// the same difference word; tall inputs are conjugated and reflected.
std::vector<Cell> removable_via_reduction(const Partition& p);

/// Number of balanced words of the given length, totient closed form.
long long balanced_count_formula(long long len);

/// All balanced words of the given length in lexicographic order;
/// guarded to len <= 30.
std::vector<BinaryWord> balanced_enumerate(long long len);

} // namespace tripart
