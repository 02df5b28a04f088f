#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "dynpal/cluster.hpp"
#include "dynpal/oracle.hpp"

using namespace dynpal;

namespace {

bool has(const std::vector<Interval>& v, Interval iv) { return std::find(v.begin(), v.end(), iv) != v.end(); }

// Every maximal palindrome of the text at a lattice center inside [a..b].
std::vector<Interval> lattice_palindromes(const std::string& s, Pos a, Pos b, Pos p, Pos residue) {
    std::vector<Interval> out;
    for (const Interval& iv : oracle::all_maximal_palindromes(s).maximal) {
        if (a <= iv.start && iv.end <= b && ((iv.doubled_center() - residue) % p + p) % p == 0) out.push_back(iv);
    }
    return out;
}

}  // namespace

TEST_CASE("represented sets") {
    const Cluster unary{1, 4, 1, 4, 4};
    const std::vector<Interval> want{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}};
    CHECK(unary.represented() == want);

    const Cluster alt{1, 7, 2, 7, 7};
    CHECK(alt.r_p() == 1);
    CHECK(alt.r_s() == 1);
    const auto rep = alt.represented();
    for (Interval iv : {Interval{1, 1}, Interval{1, 3}, Interval{1, 5}, Interval{1, 7}, Interval{7, 7},
                        Interval{5, 7}, Interval{3, 7}}) {
        CHECK(has(rep, iv));
        CHECK(alt.represents(iv));
    }
    CHECK(rep.size() == 7);
    CHECK_FALSE(alt.represents({1, 2}));
    CHECK_FALSE(alt.represents({2, 4}));
    CHECK(alt.longest_member() == Interval{1, 7});
    CHECK(alt.top() == 7);
}

TEST_CASE("longest member within an interval") {
    const Cluster c{10, 30, 2, 21, 19};
    CHECK(c.longest_prefix_within({5, 25}) == Interval{10, 24});
    CHECK(c.longest_prefix_within({5, 40}) == Interval{10, 30});
    CHECK_FALSE(c.longest_prefix_within({11, 40}).has_value());
    CHECK(c.longest_suffix_within({20, 35}) == Interval{20, 30});
    CHECK(c.longest_suffix_within({21, 35}) == Interval{22, 30});
    CHECK_FALSE(c.longest_suffix_within({20, 29}).has_value());
}

TEST_CASE("nested pair period formula") {
    // |p_b| - |p_s| - 2d with d the offset of p_s from p_b's start.
    CHECK(nested_pair_period({1, 5}, {1, 3}) == 2);
    CHECK(nested_pair_period({1, 11}, {1, 9}) == 2);
    CHECK(nested_pair_period({1, 5}, {1, 4}) == 1);
    CHECK(nested_pair_period({1, 11}, {3, 11}) == 2);
    CHECK(central_periodic_interval({1, 11}, {1, 9}) == Interval{1, 11});
    CHECK(central_periodic_interval({1, 11}, {3, 11}) == Interval{1, 11});
    CHECK(central_periodic_interval({1, 20}, {2, 8}) == Interval{2, 19});
    CHECK(central_periodic_interval({1, 20}, {13, 19}) == Interval{2, 19});
}

TEST_CASE("shape_run") {
    DynamicText t("aaaaaa", 1);
    auto s = shape_run(t, 1, 6, 1, 7);
    CHECK(s.cluster == Cluster{1, 6, 1, 6, 6});
    CHECK(s.midpoint_on_lattice);

    // Run [2..6] of "cabac"-like flank: whole run palindrome whose flanks match.
    DynamicText u("cababac", 1);
    auto r = shape_run(u, 2, 6, 2, 8);
    CHECK(r.midpoint_on_lattice);
    CHECK(r.cluster.mpp_len == 3);
    CHECK(r.cluster.mps_len == 3);

    // Non-palindromic run: "zababababy" has period 2 on [2..9].
    DynamicText z("zababababy", 1);
    auto q = shape_run(z, 2, 9, 2, 6);
    CHECK_FALSE(q.midpoint_on_lattice);
    CHECK(q.cluster.mpp_len == 7);
    CHECK(q.cluster.mps_len == 7);
    CHECK_THROWS_AS(shape_run(z, 2, 4, 2, 6), std::invalid_argument);
}

TEST_CASE("cut a unary cluster") {
    DynamicText t("aaaaaa", 1);
    LceEngine lce(true);
    const Cluster c{1, 6, 1, 6, 6};
    t.substitute(4, 'b');
    CutResult res = cut_cluster(t, lce, c, 4);
    REQUIRE(res.left);
    REQUIRE(res.right);
    CHECK(res.left->interval() == Interval{1, 3});
    CHECK(res.left->mpp_len == 3);
    CHECK(res.left->mps_len == 3);
    CHECK(res.right->interval() == Interval{5, 6});
    CHECK(res.right->mpp_len == 2);
    CHECK_THROWS_AS(cut_cluster(t, lce, c, 1), std::out_of_range);
    CHECK_THROWS_AS(cut_cluster(t, lce, c, 6), std::out_of_range);
}

TEST_CASE("cut an alternating cluster explodes the short side") {
    DynamicText t("abababa", 1);
    LceEngine lce(true);
    const Cluster c{1, 7, 2, 7, 7};
    t.substitute(4, 'x');
    CutResult res = cut_cluster(t, lce, c, 4);
    CHECK_FALSE(res.left);
    CHECK_FALSE(res.right);
    CHECK(has(res.emitted, {1, 3}));
    CHECK(has(res.emitted, {1, 1}));
    CHECK(has(res.emitted, {5, 7}));
    CHECK(has(res.emitted, {7, 7}));
    for (const Interval& iv : res.emitted) CHECK(oracle::is_palindrome(t.str(), iv));
}

TEST_CASE("extend") {
    LceEngine lce(true);
    {
        DynamicText t("aaXaa", 1);
        const Cluster left{1, 2, 1, 2, 2};
        t.substitute(3, 'a');
        ExtendResult r = extend_cluster(t, lce, left, Side::right);
        CHECK(r.cluster == Cluster{1, 5, 1, 5, 5});
        const Cluster right{4, 5, 1, 2, 2};
        CHECK(extend_cluster(t, lce, right, Side::left).cluster == Cluster{1, 5, 1, 5, 5});
    }
    {
        DynamicText t("ababc", 1);
        const Cluster c{1, 4, 2, 3, 3};
        CHECK(extend_cluster(t, lce, c, Side::right).cluster == c);
    }
    {
        DynamicText t("ababX", 1);
        const Cluster c{1, 4, 2, 3, 3};
        t.substitute(5, 'a');
        ExtendResult r = extend_cluster(t, lce, c, Side::right);
        CHECK(r.cluster.interval() == Interval{1, 5});
        CHECK(r.cluster.mpp_len == 5);
        CHECK(r.cluster.r_p() == 1);
        CHECK(has(r.emitted, {1, 5}));
    }
}

TEST_CASE("cut and extend agree with brute force") {
    // Split a run at a random point, and grow it back, on random periodic
    // texts; each resulting cluster must represent exactly the lattice
    // palindromes of length >= 2p inside its run that touch a run boundary.
    std::mt19937_64 rng(41);
    LceEngine lce(true);
    for (int round = 0; round < 3000; ++round) {
        const Pos p = 1 + static_cast<Pos>(rng() % 4);
        std::string unit;
        for (Pos k = 0; k < p; ++k) unit += static_cast<char>('a' + rng() % 2);
        const Pos len = 2 * p + static_cast<Pos>(rng() % 30);
        std::string s = "#";
        while (static_cast<Pos>(s.size()) < len + 1) s += unit;
        s.resize(static_cast<std::size_t>(len + 1));
        s += "$";
        // Make the unit palindromic so the lattice has members.
        if (std::string(unit.rbegin(), unit.rend()) != unit) continue;
        const Pos a = 2, b = len + 1;
        if (oracle::naive_period(s, a, b) != p) continue;
        DynamicText t(s, rng());
        const Pos lattice = 2 * a + p - 1;
        const Cluster c = shape_run(t, a, b, p, lattice).cluster;

        auto check = [&](const std::optional<Cluster>& part) {
            if (!part) return;
            const Pos residue = part->lattice_residue();
            for (const Interval& iv : lattice_palindromes(t.str().data(), part->start, part->end, p, residue)) {
                if (iv.length() >= 2 * p && (iv.start == part->start || iv.end == part->end)) {
                    REQUIRE(part->represents(iv));
                }
            }
            for (const Interval& iv : part->represented()) {
                REQUIRE(oracle::is_palindrome(t.str(), iv));
                REQUIRE(oracle::naive_radius(t.str(), iv.doubled_center()) * 2 + (iv.length() % 2 == 0 ? 0 : 1) ==
                        iv.length());
            }
        };

        const Pos x = a + static_cast<Pos>(rng() % static_cast<std::uint64_t>(len));
        const unsigned char old = t.char_at(x);
        t.substitute(x, '*');
        CutResult cut = split_cluster(t, lce, c, x);
        check(cut.left);
        check(cut.right);
        for (const Interval& iv : cut.emitted) REQUIRE(oracle::is_palindrome(t.str(), iv));

        t.substitute(x, old);
        if (cut.left && x == cut.left->end + 1) {
            ExtendResult ext = extend_cluster(t, lce, *cut.left, Side::right);
            REQUIRE(ext.cluster.interval() == c.interval());
            check(ext.cluster);
        }
        if (cut.right && x == cut.right->start - 1) {
            ExtendResult ext = extend_cluster(t, lce, *cut.right, Side::left);
            REQUIRE(ext.cluster.interval() == c.interval());
        }
    }
}
