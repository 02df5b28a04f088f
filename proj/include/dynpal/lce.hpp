#pragma once

#include <cstdint>

#include "dynpal/hashed_text.hpp"
#include "dynpal/types.hpp"

namespace dynpal {

// Palindrome center in doubled coordinates: an odd center at position c is
// 2c, an even center between c and c+1 is 2c+1. A text of length n has the
// 2n-1 centers 2..2n.
class Center {
public:
    static constexpr Center odd(Pos c) { return Center(2 * c); }
    static constexpr Center even(Pos c) { return Center(2 * c + 1); }
    static constexpr Center from_doubled(Pos d) { return Center(d); }

    constexpr Pos doubled() const { return doubled_; }
    constexpr bool is_odd() const { return doubled_ % 2 == 0; }
    constexpr bool valid_for(Pos n) const { return doubled_ >= 2 && doubled_ <= 2 * n; }

    // Palindrome of the given radius around this center. Odd center c gives
    // [c-r..c+r]; even center (c, c+1) gives [c-r+1..c+r], empty for r = 0.
    constexpr Interval span(Pos radius) const {
        if (is_odd()) return {doubled_ / 2 - radius, doubled_ / 2 + radius};
        const Pos c = doubled_ / 2;
        return {c - radius + 1, c + radius};
    }

    friend constexpr bool operator==(Center, Center) = default;

private:
    explicit constexpr Center(Pos d) : doubled_(d) {}
    Pos doubled_;
};

struct LceStats {
    std::uint64_t queries = 0;              // lcp + lcs_back + palindrome_radius calls
    std::uint64_t comparisons = 0;          // fingerprint equality decisions
    std::uint64_t layer_disagreements = 0;  // one hash layer said equal, the other not
};

// Longest-common-extension queries over a DynamicText by galloping plus
// binary search on fingerprint equality. Each query makes O(log n)
// comparisons, each comparison costs O(log n).
//
// In verify mode every fingerprint decision is re-checked character by
// character and a disagreement throws HashCollisionError.
class LceEngine {
public:
    explicit LceEngine(bool verify = false) : verify_(verify) {}

    // Largest L with D[i..i+L-1] = D[j..j+L-1].
    Pos lcp(const DynamicText& t, Pos i, Pos j);
    // Largest L with D[i-L+1..i] = D[j-L+1..j].
    Pos lcs_back(const DynamicText& t, Pos i, Pos j);
    // Largest r such that center.span(r) is a palindrome inside [1..n].
    Pos palindrome_radius(const DynamicText& t, Center center);
    // Maximal palindrome at the center, possibly empty for an even center.
    Interval maximal_palindrome(const DynamicText& t, Center center) {
        return center.span(palindrome_radius(t, center));
    }

    bool verify() const { return verify_; }
    void set_verify(bool v) { verify_ = v; }
    const LceStats& stats() const { return stats_; }
    void reset_stats() { stats_ = {}; }

private:
    bool decide(const Fingerprint& a, const Fingerprint& b);
    void check_decision(bool decided, bool truth, const char* what);

    template <typename Pred>
    Pos longest_true(Pos max_len, Pred&& matches);

    bool verify_;
    LceStats stats_;
};

}  // namespace dynpal
