#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "dynpal/class_schedule.hpp"
#include "dynpal/cluster.hpp"
#include "dynpal/hashed_text.hpp"
#include "dynpal/lce.hpp"
#include "dynpal/types.hpp"

namespace dynpal {

struct IndexOptions {
    std::uint64_t seed = 0;
    // Re-check every fingerprint decision by characters, and every derived
    // cluster period against an independent divisor search.
    bool verify = false;
};

struct UpdateStats {
    std::uint64_t queue_ops = 0;        // ordered-map lookups, steps, inserts, erases
    std::uint64_t lce_ops = 0;          // lcp / lcs_back / palindrome_radius calls
    std::uint64_t pending = 0;          // size of the re-insertion list
    std::uint64_t clusters_formed = 0;  // clusters built from nested same-class pairs

    UpdateStats& operator+=(const UpdateStats& o) {
        queue_ops += o.queue_ops;
        lce_ops += o.lce_ops;
        pending += o.pending;
        clusters_formed += o.clusters_formed;
        return *this;
    }
};

// Maintains every maximal palindrome of a text under single-symbol
// substitutions, and with it the longest palindromic substring.
//
// Palindromes are bucketed into size classes. Class i keeps
//   * Q[i]: explicit palindromes, no one containing another, and
//   * CPP[i]: periodic palindromes clusters whose longest represented
//     palindrome falls in class i; each stands for a whole family of
//     palindromes on one center lattice.
// Every maximal palindrome is either explicit in exactly one Q[i] or
// represented by a cluster, never both.
//
// A substitution at x touches O(1) elements per class, so an update costs
// O(log n) LCE queries and O(log^2 n) queue operations plus cluster
// formation.
class PalindromeIndex {
public:
    PalindromeIndex() = default;

    // Bootstraps from Manacher's enumeration of all maximal palindromes.
    static PalindromeIndex build(std::string_view input, IndexOptions opts = {});
    // Text and hash parameters set up, but no palindromes stored. Test hook
    // for driving insert_with_containment by hand.
    static PalindromeIndex unpopulated(std::string_view input, IndexOptions opts = {});

    Longest longest() const;
    void substitute(Pos x, unsigned char c);

    // Stores a maximal palindrome of the current text, folding nested
    // same-class pairs into clusters. `pending` holds maximal palindromes that
    // are known but not yet stored.
    void insert_with_containment(const Interval& candidate, std::span<const Interval> pending = {});

    // Minimal period of the central periodic palindrome `cpp` of `outer`,
    // given some period `candidate_period` of it.
    Pos find_cpp_period(const Interval& outer, const Interval& cpp, Pos candidate_period,
                        std::span<const Interval> pending = {});

    std::vector<Interval> all_maximal_palindromes() const;
    std::vector<Interval> explicit_lmps() const;
    std::vector<Cluster> clusters() const;
    std::vector<Interval> explicit_in_class(int i) const;
    std::vector<Cluster> clusters_in_class(int i) const;

    // Throws InvariantError describing the first violated structural
    // invariant. O(n log n); meant for tests and verify runs.
    void check_invariants() const;
    std::string dump() const;

    const DynamicText& text() const { return text_; }
    const ClassSchedule& schedule() const { return schedule_; }
    const UpdateStats& last_update() const { return last_; }
    const UpdateStats& total() const { return total_; }
    const LceStats& lce_stats() const { return lce_.stats(); }
    bool verify() const { return verify_; }

private:
    struct LmpQueue {
        std::map<Pos, Pos> by_start;             // start -> end
        std::map<Pos, Pos> by_end;               // end -> start
        std::set<std::pair<Pos, Pos>> best;      // (-length, start)
    };
    struct ClusterQueue {
        std::map<Pos, Cluster> by_start;
        std::map<Pos, Pos> by_end;                      // end -> start
        std::set<std::tuple<Pos, Pos, Pos>> best;       // (-top, member start, cluster start)
    };

    PalindromeIndex(std::string_view input, IndexOptions opts);

    int class_of(Pos length) const { return schedule_.class_of(length); }
    static bool keep(const Cluster& c) { return c.length() >= 2 * c.period && 8 * c.period <= c.top(); }

    void q_insert(const Interval& iv);
    void q_erase(int cls, Pos start);
    void cpp_insert(int cls, const Cluster& c);
    void cpp_erase(int cls, Pos start);

    bool represented_by_cluster(const Interval& iv);
    void adopt(const Cluster& c);
    void place(const Cluster& c, std::vector<Interval>& pending);
    void form_cluster(const Interval& big, const Interval& small, std::span<const Interval> pending);
    Pos period_by_divisors(const Interval& cpp, Pos period);

    DynamicText text_;
    LceEngine lce_;
    ClassSchedule schedule_;
    std::vector<LmpQueue> q_;
    std::vector<ClusterQueue> cpp_;
    std::set<int> cpp_nonempty_;
    UpdateStats last_;
    UpdateStats total_;
    bool verify_ = false;
};

}  // namespace dynpal
