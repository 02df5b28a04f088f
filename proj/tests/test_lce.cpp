#include <doctest.h>

#include <bit>
#include <random>
#include <string>

#include "dynpal/bench.hpp"
#include "dynpal/lce.hpp"
#include "dynpal/oracle.hpp"

using namespace dynpal;

TEST_CASE("center coordinates") {
    CHECK(Center::odd(3).doubled() == 6);
    CHECK(Center::even(3).doubled() == 7);
    CHECK(Center::odd(3).is_odd());
    CHECK_FALSE(Center::even(3).is_odd());
    CHECK(Center::odd(3).span(2) == Interval{1, 5});
    CHECK(Center::even(3).span(2) == Interval{2, 5});
    CHECK(Center::even(3).span(0).empty());
    CHECK(Center::odd(1).valid_for(1));
    CHECK_FALSE(Center::even(1).valid_for(1));
    CHECK(Center::even(1).valid_for(2));
}

TEST_CASE("lcp and lcs_back examples") {
    LceEngine lce(true);
    DynamicText abab("abab", 1), abc("abc", 1);
    CHECK(lce.lcp(abab, 1, 3) == 2);
    CHECK(lce.lcp(abc, 1, 2) == 0);
    CHECK(lce.lcs_back(abab, 2, 4) == 2);
    CHECK(lce.lcs_back(abc, 2, 3) == 0);
    for (Pos i = 1; i <= 4; ++i) {
        CHECK(lce.lcp(abab, i, i) == 4 - i + 1);
        CHECK(lce.lcs_back(abab, i, i) == i);
    }
    CHECK_THROWS_AS(lce.lcp(abc, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(lce.lcs_back(abc, 1, 4), std::out_of_range);
}

TEST_CASE("palindrome_radius examples") {
    LceEngine lce(true);
    CHECK(lce.palindrome_radius(DynamicText("abacaba", 1), Center::odd(4)) == 3);
    CHECK(lce.palindrome_radius(DynamicText("aa", 1), Center::even(1)) == 1);
    DynamicText abc("abc", 1);
    CHECK(lce.palindrome_radius(abc, Center::odd(2)) == 0);
    CHECK(lce.maximal_palindrome(abc, Center::odd(2)) == Interval{2, 2});
    CHECK(lce.maximal_palindrome(abc, Center::even(1)).empty());
    CHECK_THROWS_AS(lce.palindrome_radius(abc, Center::even(3)), std::out_of_range);
}

TEST_CASE("exhaustive agreement with naive on small texts") {
    std::mt19937_64 rng(21);
    LceEngine lce(true);
    for (int round = 0; round < 60; ++round) {
        const int alphabet = 2 + round % 2;
        const Pos n = 1 + static_cast<Pos>(rng() % 300);
        std::string s = random_text(n, alphabet, rng());
        DynamicText t(s, rng());
        for (int step = 0; step < 2; ++step) {
            for (Pos i = 1; i <= n; i += 1 + n / 40) {
                for (Pos j = 1; j <= n; ++j) {
                    REQUIRE(lce.lcp(t, i, j) == oracle::naive_lcp(s, i, j));
                    REQUIRE(lce.lcs_back(t, i, j) == oracle::naive_lcs_back(s, i, j));
                }
            }
            for (Pos d = 2; d <= 2 * n; ++d) {
                REQUIRE(lce.palindrome_radius(t, Center::from_doubled(d)) == oracle::naive_radius(s, d));
            }
            // Second pass runs on an edited text.
            for (const Edit& e : random_edits(n, 5, alphabet, rng())) {
                t.substitute(e.pos, e.symbol);
                s[static_cast<std::size_t>(e.pos - 1)] = static_cast<char>(e.symbol);
            }
        }
    }
    CHECK(lce.stats().layer_disagreements == 0);
}

TEST_CASE("comparisons per query are logarithmic") {
    for (Pos n : {Pos{64}, Pos{4096}, Pos{100000}}) {
        std::string s(static_cast<std::size_t>(n), 'a');
        DynamicText t(s, 2);
        LceEngine lce;
        const int log2n = std::bit_width(static_cast<std::uint64_t>(n));
        std::mt19937_64 rng(5);
        std::uint64_t worst = 0;
        for (int k = 0; k < 200; ++k) {
            const Pos i = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(n));
            const Pos j = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(n));
            const auto before = lce.stats().comparisons;
            lce.lcp(t, i, j);
            lce.palindrome_radius(t, Center::from_doubled(i + j));
            worst = std::max(worst, lce.stats().comparisons - before);
        }
        CHECK(worst <= static_cast<std::uint64_t>(2 * (2 * log2n + 2)));
    }
}
