#include "dynpal/cluster.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynpal {

namespace {

Pos floor_mod(Pos a, Pos m) {
    const Pos r = a % m;
    return r < 0 ? r + m : r;
}

// Largest L <= limit with L == residue (mod p); may be <= 0.
Pos largest_congruent(Pos limit, Pos residue, Pos p) { return limit - floor_mod(limit - residue, p); }

// Maximal palindromes at every lattice center inside [a..b].
void probe_fragment(const DynamicText& t, LceEngine& lce, Pos a, Pos b, Pos p, Pos lattice,
                    std::vector<Interval>& out) {
    const Pos lo = 2 * a, hi = 2 * b;
    for (Pos d = lo + floor_mod(lattice - lo, p); d <= hi; d += p) {
        const Interval iv = lce.maximal_palindrome(t, Center::from_doubled(d));
        if (!iv.empty()) out.push_back(iv);
    }
}

void shape_part(const DynamicText& t, LceEngine& lce, Pos a, Pos b, Pos p, Pos lattice,
                std::optional<Cluster>& slot, std::vector<Interval>& emitted) {
    if (b < a) return;
    if (b - a + 1 >= 2 * p) {
        const RunShape shape = shape_run(t, a, b, p, lattice);
        slot = shape.cluster;
        if (shape.midpoint_on_lattice) {
            emitted.push_back(lce.maximal_palindrome(t, Center::from_doubled(a + b)));
        }
    } else {
        probe_fragment(t, lce, a, b, p, lattice, emitted);
    }
}

}  // namespace

Pos Cluster::lattice_residue() const { return floor_mod(2 * start + mpp_len - 1, period); }

bool Cluster::represents(const Interval& iv) const {
    const Pos len = iv.length();
    if (len < 1) return false;
    if (iv.start == start && len <= mpp_len && (mpp_len - len) % period == 0) return true;
    if (iv.end == end && len <= mps_len && (mps_len - len) % period == 0) return true;
    return false;
}

std::vector<Interval> Cluster::represented() const {
    std::vector<Interval> out;
    for (Pos len = mpp_len; len >= 1; len -= period) out.push_back({start, start + len - 1});
    for (Pos len = mps_len; len >= 1; len -= period) out.push_back({end - len + 1, end});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Interval> Cluster::longest_prefix_within(const Interval& outer) const {
    if (start < outer.start || start > outer.end) return std::nullopt;
    const Pos limit = std::min(mpp_len, outer.end - start + 1);
    const Pos len = largest_congruent(limit, r_p(), period);
    if (len < 1) return std::nullopt;
    return Interval{start, start + len - 1};
}

std::optional<Interval> Cluster::longest_suffix_within(const Interval& outer) const {
    if (end > outer.end || end < outer.start) return std::nullopt;
    const Pos limit = std::min(mps_len, end - outer.start + 1);
    const Pos len = largest_congruent(limit, r_s(), period);
    if (len < 1) return std::nullopt;
    return Interval{end - len + 1, end};
}

std::string to_string(const Cluster& c) {
    return "cluster" + to_string(c.interval()) + " p=" + std::to_string(c.period) +
           " mpp=" + std::to_string(c.mpp_len) + " mps=" + std::to_string(c.mps_len);
}

Pos nested_pair_period(const Interval& big, const Interval& small) {
    const Pos diff = big.doubled_center() - small.doubled_center();
    return diff < 0 ? -diff : diff;
}

Interval central_periodic_interval(const Interval& big, const Interval& small) {
    Pos left_start = small.start;
    if (small.doubled_center() > big.doubled_center()) left_start = big.start + big.end - small.end;
    return {left_start, big.start + big.end - left_start};
}

RunShape shape_run(const DynamicText& t, Pos a, Pos b, Pos p, Pos lattice_center) {
    const Pos len = b - a + 1;
    if (p < 1 || len < 2 * p) {
        throw std::invalid_argument("run [" + std::to_string(a) + ".." + std::to_string(b) +
                                    "] too short for period " + std::to_string(p));
    }
    RunShape shape;
    Cluster& c = shape.cluster;
    c.start = a;
    c.end = b;
    c.period = p;
    // A prefix of length L is centered at 2a + L - 1; a suffix at 2b - L + 1.
    Pos mpp = largest_congruent(len, lattice_center - 2 * a + 1, p);
    Pos mps = largest_congruent(len, 2 * b + 1 - lattice_center, p);
    shape.midpoint_on_lattice = (mpp == len);
    // The whole run is a palindrome; it is locally maximal only when its flanks differ.
    if (shape.midpoint_on_lattice && t.same_symbol(a - 1, b + 1)) {
        mpp -= p;
        mps -= p;
    }
    c.mpp_len = mpp;
    c.mps_len = mps;
    return shape;
}

CutResult split_cluster(const DynamicText& t, LceEngine& lce, const Cluster& c, Pos x) {
    if (x < c.start || x > c.end) {
        throw std::out_of_range("position " + std::to_string(x) + " outside " + to_string(c));
    }
    CutResult res;
    const Pos lattice = c.lattice_residue();
    shape_part(t, lce, c.start, x - 1, c.period, lattice, res.left, res.emitted);
    shape_part(t, lce, x + 1, c.end, c.period, lattice, res.right, res.emitted);
    return res;
}

CutResult cut_cluster(const DynamicText& t, LceEngine& lce, const Cluster& c, Pos x) {
    if (x <= c.start || x >= c.end) {
        throw std::out_of_range("cut position " + std::to_string(x) + " not strictly inside " + to_string(c));
    }
    return split_cluster(t, lce, c, x);
}

ExtendResult extend_cluster(const DynamicText& t, LceEngine& lce, const Cluster& c, Side side) {
    const Pos p = c.period;
    Pos a = c.start, b = c.end;
    if (side == Side::right) {
        b = a + p - 1 + lce.lcp(t, a, a + p);
    } else {
        a = b - p + 1 - lce.lcs_back(t, b, b - p);
    }
    ExtendResult res;
    const RunShape shape = shape_run(t, a, b, p, c.lattice_residue());
    res.cluster = shape.cluster;
    if (shape.midpoint_on_lattice) res.emitted.push_back(lce.maximal_palindrome(t, Center::from_doubled(a + b)));
    return res;
}

}  // namespace dynpal
