#pragma once

#include <string_view>
#include <vector>

#include "dynpal/types.hpp"

// Brute-force references. Everything here works on plain strings and knows
// nothing about fingerprints or the index.
namespace dynpal::oracle {

using dynpal::Longest;

struct OracleReport {
    // One nonempty maximal palindrome per center, sorted by (start, end).
    std::vector<Interval> maximal;
    Longest longest;
};

// Expansion around each of the 2n-1 centers. O(n^2) worst case; this is the
// normative reference.
OracleReport all_maximal_palindromes(std::string_view text);

// Manacher's algorithm, O(n). Same result as all_maximal_palindromes.
OracleReport all_maximal_palindromes_fast(std::string_view text);

// Leftmost longest palindromic substring, O(n).
Longest longest(std::string_view text);

// Radius per doubled center 2..2n (index d - 2), O(n).
std::vector<Pos> manacher_radii(std::string_view text);

Pos naive_lcp(std::string_view text, Pos i, Pos j);
Pos naive_lcs_back(std::string_view text, Pos i, Pos j);
// Radius at a doubled center, by direct expansion.
Pos naive_radius(std::string_view text, Pos doubled_center);
// Minimal period of text[i..j]; the length itself when nothing smaller works.
Pos naive_period(std::string_view text, Pos i, Pos j);
bool is_palindrome(std::string_view text, Interval iv);

}  // namespace dynpal::oracle
