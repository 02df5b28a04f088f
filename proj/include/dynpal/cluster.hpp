#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dynpal/hashed_text.hpp"
#include "dynpal/lce.hpp"
#include "dynpal/types.hpp"

namespace dynpal {

// A periodic palindromes cluster: the maximal run [start..end] of minimal
// period `period`, together with the lengths of its maximal palindromic
// prefix (MPP) and suffix (MPS) that are locally maximal.
//
// The cluster implicitly represents every prefix whose length is
// congruent to mpp_len mod period (up to mpp_len), and every suffix whose
// length is congruent to mps_len mod period (up to mps_len). All of these
// share one lattice of doubled centers spaced `period` apart.
struct Cluster {
    Pos start = 0;
    Pos end = -1;
    Pos period = 1;
    Pos mpp_len = 0;
    Pos mps_len = 0;

    Pos length() const { return end - start + 1; }
    Interval interval() const { return {start, end}; }
    Pos r_p() const { return mpp_len % period; }
    Pos r_s() const { return mps_len % period; }
    Interval mpp() const { return {start, start + mpp_len - 1}; }
    Interval mps() const { return {end - mps_len + 1, end}; }
    Pos top() const { return std::max(mpp_len, mps_len); }

    // Leftmost among the longest represented palindromes.
    Interval longest_member() const { return mpp_len >= mps_len ? mpp() : mps(); }

    // Residue mod period of the doubled centers of represented palindromes.
    Pos lattice_residue() const;
    bool represents(const Interval& iv) const;
    // Sorted, duplicate-free.
    std::vector<Interval> represented() const;

    // Longest represented prefix / suffix lying inside `outer`, if any.
    std::optional<Interval> longest_prefix_within(const Interval& outer) const;
    std::optional<Interval> longest_suffix_within(const Interval& outer) const;

    friend bool operator==(const Cluster&, const Cluster&) = default;
};

std::string to_string(const Cluster& c);

// Period of the central periodic palindrome implied by two locally maximal
// palindromes with `small` nested in `big`: the distance between the two
// occurrences of `small` mirrored around big's center. This is the
// difference of their doubled centers.
Pos nested_pair_period(const Interval& big, const Interval& small);

// The interval spanned by `small` (left instance w.r.t. big's center) and its
// mirror image inside `big`.
Interval central_periodic_interval(const Interval& big, const Interval& small);

struct RunShape {
    Cluster cluster;
    // True when the run's midpoint is on the lattice, i.e. the whole run is a
    // palindrome. Its maximal palindrome may then reach past the run and
    // must be measured separately.
    bool midpoint_on_lattice = false;
};

// Derives MPP and MPS of the maximal p-periodic run [a..b] whose palindrome
// centers are congruent to `lattice_center` (doubled) mod p. Requires
// b - a + 1 >= 2p. O(1): only the two flanks are inspected.
RunShape shape_run(const DynamicText& t, Pos a, Pos b, Pos p, Pos lattice_center);

struct CutResult {
    std::optional<Cluster> left;
    std::optional<Cluster> right;
    // Maximal palindromes measured on fragments too short to stay periodic,
    // plus the maximal palindromes at the midpoints of surviving parts.
    std::vector<Interval> emitted;
};

// Splits a cluster around a substituted interior position x
// (start < x < end). The text must already hold the new symbol.
CutResult cut_cluster(const DynamicText& t, LceEngine& lce, const Cluster& c, Pos x);

// Same as cut_cluster but also accepts x == start or x == end, where one side
// is empty.
CutResult split_cluster(const DynamicText& t, LceEngine& lce, const Cluster& c, Pos x);

enum class Side { left, right };

struct ExtendResult {
    Cluster cluster;
    std::vector<Interval> emitted;
};

// Re-measures the run after a substitution adjacent to the given side
// (x == end + 1 for Side::right, x == start - 1 for Side::left). One LCE query
// finds the new extent; MPP and MPS follow arithmetically.
ExtendResult extend_cluster(const DynamicText& t, LceEngine& lce, const Cluster& c, Side side);

}  // namespace dynpal
