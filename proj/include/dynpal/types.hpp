#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dynpal {

// 1-based text position. Signed so that center/offset arithmetic can go
// below 1 without wrapping.
using Pos = std::int64_t;

// Closed interval [start..end] of text positions.
struct Interval {
    Pos start = 0;
    Pos end = -1;

    constexpr Pos length() const { return end - start + 1; }
    constexpr bool empty() const { return end < start; }

    // Center in doubled coordinates: start + end. Odd palindromes have an even
    // doubled center, even palindromes an odd one.
    constexpr Pos doubled_center() const { return start + end; }

    constexpr bool contains(const Interval& o) const {
        return start <= o.start && o.end <= end;
    }
    constexpr bool properly_contains(const Interval& o) const {
        return contains(o) && !(start == o.start && end == o.end);
    }

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::string to_string(const Interval& iv) {
    return "[" + std::to_string(iv.start) + ".." + std::to_string(iv.end) + "]";
}

// Leftmost longest palindromic substring; start = 0 and length = 0 for an
// empty text.
struct Longest {
    Pos start = 0;
    Pos length = 0;

    friend bool operator==(const Longest&, const Longest&) = default;
};

// Raised when a structural invariant of the index turns out to be violated.
// Never expected on a correct build; signals a logic bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised in verify mode when a fingerprint decision disagrees with a
// character-by-character comparison.
class HashCollisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dynpal
