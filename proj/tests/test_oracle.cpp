#include <doctest.h>

#include <random>
#include <string>

#include "dynpal/bench.hpp"
#include "dynpal/oracle.hpp"

using namespace dynpal;

TEST_CASE("maximal palindromes by hand") {
    using V = std::vector<Interval>;
    CHECK(oracle::all_maximal_palindromes("abc").maximal == V{{1, 1}, {2, 2}, {3, 3}});
    // The edge centers count: [1..1] cannot grow past the text boundary.
    CHECK(oracle::all_maximal_palindromes("aaa").maximal == V{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
    CHECK(oracle::all_maximal_palindromes("aba").maximal == V{{1, 1}, {1, 3}, {3, 3}});
    CHECK(oracle::all_maximal_palindromes("").maximal.empty());
    CHECK(oracle::all_maximal_palindromes("").longest == Longest{0, 0});
}

TEST_CASE("longest examples") {
    CHECK(oracle::longest("") == Longest{0, 0});
    CHECK(oracle::longest("abbbbba") == Longest{1, 7});
    CHECK(oracle::longest("xabay") == Longest{2, 3});
    CHECK(oracle::longest("abaa") == Longest{1, 3});
    CHECK(oracle::longest("abcd") == Longest{1, 1});
    CHECK(oracle::all_maximal_palindromes("xabay").longest == Longest{2, 3});
}

TEST_CASE("naive period") {
    CHECK(oracle::naive_period("abab", 1, 4) == 2);
    CHECK(oracle::naive_period("aaaa", 1, 4) == 1);
    CHECK(oracle::naive_period("abcab", 1, 5) == 3);
    CHECK(oracle::naive_period("abc", 1, 3) == 3);
    CHECK(oracle::naive_period("xabaay", 2, 4) == 2);
}

TEST_CASE("manacher equals expansion") {
    std::mt19937_64 rng(31);
    auto check = [](const std::string& s) {
        const auto slow = oracle::all_maximal_palindromes(s);
        const auto fast = oracle::all_maximal_palindromes_fast(s);
        REQUIRE(slow.maximal == fast.maximal);
        REQUIRE(slow.longest == fast.longest);
        REQUIRE(oracle::longest(s) == slow.longest);
        for (const Interval& iv : slow.maximal) REQUIRE(oracle::is_palindrome(s, iv));
    };
    for (int k = 0; k < 300; ++k) {
        check(random_text(static_cast<Pos>(rng() % 2001), 2 + static_cast<int>(rng() % 3), rng()));
    }
    check(std::string(2000, 'a'));
    std::string ab;
    while (ab.size() < 2000) ab += "ab";
    check(ab);
    check("a" + std::string(1998, 'b') + "a");
}
