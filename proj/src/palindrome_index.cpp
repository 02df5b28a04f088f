#include "dynpal/palindrome_index.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dynpal/oracle.hpp"

namespace dynpal {

namespace {

bool longer_first(const Interval& a, const Interval& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.start < b.start;
}

std::vector<Pos> prime_factors(Pos v) {
    std::vector<Pos> out;
    for (Pos f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

}  // namespace

PalindromeIndex::PalindromeIndex(std::string_view input, IndexOptions opts)
    : text_(input, opts.seed),
      lce_(opts.verify),
      schedule_(static_cast<Pos>(input.size())),
      q_(static_cast<std::size_t>(schedule_.num_classes())),
      cpp_(static_cast<std::size_t>(schedule_.num_classes())),
      verify_(opts.verify) {}

PalindromeIndex PalindromeIndex::unpopulated(std::string_view input, IndexOptions opts) {
    return PalindromeIndex(input, opts);
}

PalindromeIndex PalindromeIndex::build(std::string_view input, IndexOptions opts) {
    PalindromeIndex idx(input, opts);
    const auto radii = oracle::manacher_radii(input);
    std::vector<Interval> all;
    all.reserve(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const Interval iv = Center::from_doubled(static_cast<Pos>(k) + 2).span(radii[k]);
        if (!iv.empty()) all.push_back(iv);
    }
    // Longest first: when a nested pair turns up, every longer palindrome is
    // already stored, so the period search sees its best witness.
    std::sort(all.begin(), all.end(), longer_first);
    for (const Interval& iv : all) idx.insert_with_containment(iv);
    idx.last_ = {};
    idx.total_ = {};
    idx.lce_.reset_stats();
    return idx;
}

// ---------------------------------------------------------------------------
// Queue primitives. Each counts one queue operation per map touched.

void PalindromeIndex::q_insert(const Interval& iv) {
    LmpQueue& q = q_[static_cast<std::size_t>(class_of(iv.length()))];
    q.by_start.emplace(iv.start, iv.end);
    q.by_end.emplace(iv.end, iv.start);
    q.best.emplace(-iv.length(), iv.start);
    last_.queue_ops += 3;
}

void PalindromeIndex::q_erase(int cls, Pos start) {
    LmpQueue& q = q_[static_cast<std::size_t>(cls)];
    auto it = q.by_start.find(start);
    if (it == q.by_start.end()) throw InvariantError("erasing missing explicit palindrome at " + std::to_string(start));
    const Pos end = it->second;
    q.by_end.erase(end);
    q.best.erase({-(end - start + 1), start});
    q.by_start.erase(it);
    last_.queue_ops += 4;
}

void PalindromeIndex::cpp_insert(int cls, const Cluster& c) {
    ClusterQueue& q = cpp_[static_cast<std::size_t>(cls)];
    q.by_start.emplace(c.start, c);
    q.by_end.emplace(c.end, c.start);
    q.best.emplace(-c.top(), c.longest_member().start, c.start);
    cpp_nonempty_.insert(cls);
    last_.queue_ops += 3;
}

void PalindromeIndex::cpp_erase(int cls, Pos start) {
    ClusterQueue& q = cpp_[static_cast<std::size_t>(cls)];
    auto it = q.by_start.find(start);
    if (it == q.by_start.end()) throw InvariantError("erasing missing cluster at " + std::to_string(start));
    const Cluster c = it->second;
    q.by_end.erase(c.end);
    q.best.erase({-c.top(), c.longest_member().start, c.start});
    q.by_start.erase(it);
    if (q.by_start.empty()) cpp_nonempty_.erase(cls);
    last_.queue_ops += 4;
}

// ---------------------------------------------------------------------------

Longest PalindromeIndex::longest() const {
    for (int i = schedule_.num_classes() - 1; i >= 0; --i) {
        const LmpQueue& q = q_[static_cast<std::size_t>(i)];
        const ClusterQueue& cq = cpp_[static_cast<std::size_t>(i)];
        if (q.best.empty() && cq.best.empty()) continue;
        std::pair<Pos, Pos> best{0, 0};
        bool have = false;
        if (!q.best.empty()) {
            best = *q.best.begin();
            have = true;
        }
        if (!cq.best.empty()) {
            const auto& [neg_len, member_start, cluster_start] = *cq.best.begin();
            const std::pair<Pos, Pos> cand{neg_len, member_start};
            if (!have || cand < best) best = cand;
        }
        return {best.second, -best.first};
    }
    return {};
}

bool PalindromeIndex::represented_by_cluster(const Interval& iv) {
    for (auto it = cpp_nonempty_.lower_bound(class_of(iv.length())); it != cpp_nonempty_.end(); ++it) {
        const ClusterQueue& cq = cpp_[static_cast<std::size_t>(*it)];
        last_.queue_ops += 2;
        if (auto s = cq.by_start.find(iv.start); s != cq.by_start.end() && s->second.represents(iv)) return true;
        if (auto e = cq.by_end.find(iv.end); e != cq.by_end.end()) {
            ++last_.queue_ops;
            if (cq.by_start.at(e->second).represents(iv)) return true;
        }
    }
    return false;
}

// Stores a cluster and drops explicit palindromes it now represents. Every
// represented palindrome starts at c.start or ends at c.end, and explicit
// queues hold at most one element per start and per end.
void PalindromeIndex::adopt(const Cluster& c) {
    const int cls = class_of(c.top());
    ClusterQueue& cq = cpp_[static_cast<std::size_t>(cls)];
    // Same-class clusters are never nested; anything overlapping the new run
    // that it contains is a stale copy of the same run.
    ++last_.queue_ops;
    for (auto it = cq.by_start.lower_bound(c.start); it != cq.by_start.end() && it->first <= c.end;) {
        ++last_.queue_ops;
        const Cluster& other = it->second;
        if (other.end > c.end) break;
        if (other.period != c.period && verify_) {
            throw InvariantError("same-class clusters nested: " + to_string(other) + " inside " + to_string(c));
        }
        const Pos s = other.start;
        ++it;
        cpp_erase(cls, s);
    }
    if (auto it = cq.by_start.upper_bound(c.start); it != cq.by_start.begin()) {
        const Cluster& other = std::prev(it)->second;
        if (other.end >= c.end) {
            if (verify_) throw InvariantError("cluster " + to_string(c) + " nested in " + to_string(other));
            return;
        }
    }
    cpp_insert(cls, c);
    for (int j = 0; j <= cls; ++j) {
        LmpQueue& q = q_[static_cast<std::size_t>(j)];
        if (q.by_start.empty()) continue;
        last_.queue_ops += 2;
        if (auto s = q.by_start.find(c.start); s != q.by_start.end() && c.represents({s->first, s->second})) {
            q_erase(j, c.start);
        }
        if (auto e = q.by_end.find(c.end); e != q.by_end.end() && c.represents({e->second, e->first})) {
            q_erase(j, e->second);
        }
    }
}

// Keeps a reshaped cluster when it still folds a nested same-class pair,
// otherwise spills its O(1) represented palindromes into `pending`.
void PalindromeIndex::place(const Cluster& c, std::vector<Interval>& pending) {
    if (keep(c)) {
        adopt(c);
        return;
    }
    for (const Interval& iv : c.represented()) pending.push_back(iv);
}

void PalindromeIndex::insert_with_containment(const Interval& candidate, std::span<const Interval> pending) {
    if (candidate.empty() || candidate.start < 1 || candidate.end > text_.size()) {
        throw std::out_of_range("candidate " + to_string(candidate) + " outside text");
    }
    for (int round = 0;; ++round) {
        if (round > 4) throw InvariantError("containment resolution does not settle for " + to_string(candidate));
        if (represented_by_cluster(candidate)) return;
        const int cls = class_of(candidate.length());
        LmpQueue& q = q_[static_cast<std::size_t>(cls)];
        ++last_.queue_ops;
        auto after = q.by_start.upper_bound(candidate.start);

        // Containers can only be the nearest predecessors; contained elements
        // the nearest successors. At most two of each.
        Interval big, small;
        bool nested = false;
        auto it = after;
        for (int k = 0; k < 2 && it != q.by_start.begin() && !nested; ++k) {
            --it;
            ++last_.queue_ops;
            const Interval e{it->first, it->second};
            if (e == candidate) return;
            if (e.contains(candidate)) {
                big = e, small = candidate, nested = true;
            } else if (candidate.contains(e)) {
                big = candidate, small = e, nested = true;
            }
        }
        it = after;
        for (int k = 0; k < 2 && it != q.by_start.end() && !nested; ++k, ++it) {
            ++last_.queue_ops;
            const Interval e{it->first, it->second};
            if (candidate.contains(e)) big = candidate, small = e, nested = true;
        }
        if (!nested) {
            q_insert(candidate);
            return;
        }
        form_cluster(big, small, pending);
    }
}

void PalindromeIndex::form_cluster(const Interval& big, const Interval& small, std::span<const Interval> pending) {
    const int cls = class_of(big.length());
    const Pos q = nested_pair_period(big, small);
    if (q <= 0 || q > schedule_.window(cls)) {
        throw InvariantError("nested pair " + to_string(big) + " / " + to_string(small) + " gives period " +
                             std::to_string(q) + " outside (0, " + std::to_string(schedule_.window(cls)) + "]");
    }
    const Interval cpp = central_periodic_interval(big, small);
    const Pos p = find_cpp_period(big, cpp, q, pending);
    if (verify_) {
        const Pos check = period_by_divisors(cpp, q);
        if (check != p) {
            throw InvariantError("period search for " + to_string(cpp) + " found " + std::to_string(p) +
                                 ", divisor search found " + std::to_string(check));
        }
    }
    const Pos n = text_.size();
    Pos a = cpp.start, b = cpp.end;
    if (a > 1) a -= lce_.lcs_back(text_, a - 1, a - 1 + p);
    if (b < n) b += lce_.lcp(text_, b + 1, b + 1 - p);
    const RunShape shape = shape_run(text_, a, b, p, big.doubled_center());
    if (!keep(shape.cluster)) {
        throw InvariantError("cluster from nested pair fails the keep rule: " + to_string(shape.cluster));
    }
    ++last_.clusters_formed;
    adopt(shape.cluster);
}

Pos PalindromeIndex::find_cpp_period(const Interval& outer, const Interval& cpp, Pos candidate_period,
                                     std::span<const Interval> pending) {
    (void)cpp;
    const int s = class_of(outer.length());
    const Pos w = schedule_.window(s);
    Pos best = candidate_period;
    auto consider = [&](const Interval& c) {
        if (c.empty() || !outer.properly_contains(c) || class_of(c.length()) != s) return;
        const Pos period = nested_pair_period(outer, c);
        if (period > 0 && period < best) best = period;
    };

    // Explicit witnesses in Q[s]: the first two starting at or after outer.
    const LmpQueue& q = q_[static_cast<std::size_t>(s)];
    ++last_.queue_ops;
    auto it = q.by_start.lower_bound(outer.start);
    for (int k = 0; k < 2 && it != q.by_start.end(); ++k, ++it) {
        ++last_.queue_ops;
        consider({it->first, it->second});
    }
    for (const Interval& c : pending) consider(c);

    // Witnesses hidden in clusters of class >= s: they start within w of
    // outer.start or end within w of outer.end.
    for (auto cls = cpp_nonempty_.lower_bound(s); cls != cpp_nonempty_.end(); ++cls) {
        const ClusterQueue& cq = cpp_[static_cast<std::size_t>(*cls)];
        auto visit = [&](const Cluster& c) {
            if (auto pre = c.longest_prefix_within(outer)) consider(*pre);
            if (auto suf = c.longest_suffix_within(outer)) consider(*suf);
        };
        last_.queue_ops += 2;
        auto a = cq.by_start.lower_bound(outer.start);
        for (int k = 0; k < 2 && a != cq.by_start.end() && a->first <= outer.start + w; ++k, ++a) {
            ++last_.queue_ops;
            visit(a->second);
        }
        auto e = cq.by_end.upper_bound(outer.end);
        for (int k = 0; k < 2 && e != cq.by_end.begin(); ++k) {
            --e;
            if (e->first < outer.end - w) break;
            last_.queue_ops += 2;
            visit(cq.by_start.at(e->second));
        }
    }
    return best;
}

// Independent route to the minimal period: it divides any known period of an
// interval at least twice that long, so peel prime factors while the
// quotient still passes an LCE period test.
Pos PalindromeIndex::period_by_divisors(const Interval& cpp, Pos period) {
    const Pos len = cpp.length();
    auto is_period = [&](Pos d) { return d >= len || lce_.lcp(text_, cpp.start, cpp.start + d) >= len - d; };
    if (!is_period(period)) {
        throw InvariantError(std::to_string(period) + " is not a period of " + to_string(cpp));
    }
    Pos p = period;
    for (Pos f : prime_factors(period)) {
        while (p % f == 0 && is_period(p / f)) p /= f;
    }
    return p;
}

// ---------------------------------------------------------------------------

void PalindromeIndex::substitute(Pos x, unsigned char c) {
    const Pos n = text_.size();
    if (x < 1 || x > n) {
        throw std::out_of_range("substitution at " + std::to_string(x) + " outside text of length " +
                                std::to_string(n));
    }
    last_ = {};
    if (text_.char_at(x) == c) return;
    const std::uint64_t lce_before = lce_.stats().queries;

    // Everything whose interval touches x or sits right next to it.
    std::vector<Interval> touched;
    std::vector<Cluster> touched_clusters;
    for (int i = 0; i < schedule_.num_classes(); ++i) {
        LmpQueue& q = q_[static_cast<std::size_t>(i)];
        if (q.by_start.empty()) continue;
        ++last_.queue_ops;
        for (auto it = q.by_end.lower_bound(x - 1); it != q.by_end.end() && it->second <= x + 1; ++it) {
            ++last_.queue_ops;
            touched.push_back({it->second, it->first});
        }
    }
    for (int i : cpp_nonempty_) {
        ClusterQueue& cq = cpp_[static_cast<std::size_t>(i)];
        ++last_.queue_ops;
        for (auto it = cq.by_end.lower_bound(x - 1); it != cq.by_end.end() && it->second <= x + 1; ++it) {
            ++last_.queue_ops;
            touched_clusters.push_back(cq.by_start.at(it->second));
        }
    }
    for (const Interval& iv : touched) q_erase(class_of(iv.length()), iv.start);
    for (const Cluster& k : touched_clusters) cpp_erase(class_of(k.top()), k.start);

    text_.substitute(x, c);

    std::vector<Interval> pending;
    for (const Interval& iv : touched) {
        const Interval now = lce_.maximal_palindrome(text_, Center::from_doubled(iv.doubled_center()));
        if (!now.empty()) pending.push_back(now);
    }
    for (const Cluster& k : touched_clusters) {
        if (k.start <= x && x <= k.end) {
            CutResult cut = split_cluster(text_, lce_, k, x);
            if (cut.left) place(*cut.left, pending);
            if (cut.right) place(*cut.right, pending);
            pending.insert(pending.end(), cut.emitted.begin(), cut.emitted.end());
        } else {
            ExtendResult ext = extend_cluster(text_, lce_, k, x == k.end + 1 ? Side::right : Side::left);
            place(ext.cluster, pending);
            pending.insert(pending.end(), ext.emitted.begin(), ext.emitted.end());
        }
    }
    // The centers at x and on either side of it; even ones may have been
    // empty before and so were stored nowhere.
    for (Pos d = 2 * x - 1; d <= 2 * x + 1; ++d) {
        if (!Center::from_doubled(d).valid_for(n)) continue;
        const Interval now = lce_.maximal_palindrome(text_, Center::from_doubled(d));
        if (!now.empty()) pending.push_back(now);
    }

    std::sort(pending.begin(), pending.end(), longer_first);
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    last_.pending = pending.size();
    for (const Interval& iv : pending) insert_with_containment(iv, pending);

    last_.lce_ops = lce_.stats().queries - lce_before;
    total_ += last_;
}

// ---------------------------------------------------------------------------

std::vector<Interval> PalindromeIndex::explicit_lmps() const {
    std::vector<Interval> out;
    for (const LmpQueue& q : q_) {
        for (const auto& [s, e] : q.by_start) out.push_back({s, e});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cluster> PalindromeIndex::clusters() const {
    std::vector<Cluster> out;
    for (const ClusterQueue& q : cpp_) {
        for (const auto& [s, c] : q.by_start) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
        return std::tie(a.start, a.end) < std::tie(b.start, b.end);
    });
    return out;
}

std::vector<Interval> PalindromeIndex::explicit_in_class(int i) const {
    std::vector<Interval> out;
    for (const auto& [s, e] : q_.at(static_cast<std::size_t>(i)).by_start) out.push_back({s, e});
    return out;
}

std::vector<Cluster> PalindromeIndex::clusters_in_class(int i) const {
    std::vector<Cluster> out;
    for (const auto& [s, c] : cpp_.at(static_cast<std::size_t>(i)).by_start) out.push_back(c);
    return out;
}

std::vector<Interval> PalindromeIndex::all_maximal_palindromes() const {
    std::vector<Interval> out = explicit_lmps();
    for (const Cluster& c : clusters()) {
        const auto rep = c.represented();
        out.insert(out.end(), rep.begin(), rep.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void PalindromeIndex::check_invariants() const {
    auto fail = [](const std::string& what) { throw InvariantError(what); };
    for (int i = 0; i < schedule_.num_classes(); ++i) {
        const LmpQueue& q = q_[static_cast<std::size_t>(i)];
        const std::string tag = "class " + std::to_string(i) + ": ";
        if (q.by_start.size() != q.by_end.size() || q.by_start.size() != q.best.size()) fail(tag + "queue views differ in size");
        Pos prev_end = 0;
        std::vector<Pos> starts;
        for (const auto& [s, e] : q.by_start) {
            const Interval iv{s, e};
            if (class_of(iv.length()) != i) fail(tag + to_string(iv) + " misfiled");
            if (auto f = q.by_end.find(e); f == q.by_end.end() || f->second != s) fail(tag + "by_end out of sync");
            if (e <= prev_end) fail(tag + "nested explicit palindromes ending at " + std::to_string(e));
            prev_end = e;
            starts.push_back(s);
            for (int k : cpp_nonempty_) {
                if (k < i) continue;
                for (const auto& [cs, c] : cpp_[static_cast<std::size_t>(k)].by_start) {
                    if (c.represents(iv)) fail(tag + to_string(iv) + " explicit and represented by " + to_string(c));
                }
            }
        }
        const Pos w = schedule_.window(i);
        for (std::size_t k = 2; k < starts.size(); ++k) {
            if (starts[k] - starts[k - 2] < w) fail(tag + "three explicit palindromes start within one window");
        }
        if (!q.best.empty()) {
            Pos mx = 0;
            for (const auto& [s, e] : q.by_start) mx = std::max(mx, e - s + 1);
            if (-q.best.begin()->first != mx) fail(tag + "cached maximum is stale");
        }

        const ClusterQueue& cq = cpp_[static_cast<std::size_t>(i)];
        if (cq.by_start.size() != cq.by_end.size() || cq.by_start.size() != cq.best.size()) fail(tag + "cluster views differ in size");
        if (cq.by_start.empty() == cpp_nonempty_.contains(i)) fail(tag + "nonempty set out of sync");
        const Cluster* prev = nullptr;
        for (const auto& [s, c] : cq.by_start) {
            if (class_of(c.top()) != i) fail(tag + to_string(c) + " misfiled");
            if (!keep(c)) fail(tag + to_string(c) + " too short for its period");
            if (prev) {
                if (c.end <= prev->end) fail(tag + "nested clusters");
                if (c.start - prev->start < w) fail(tag + "clusters closer than one window");
            }
            prev = &c;
        }
        if (!cq.best.empty()) {
            Pos mx = 0;
            for (const auto& [s, c] : cq.by_start) mx = std::max(mx, c.top());
            if (-std::get<0>(*cq.best.begin()) != mx) fail(tag + "cached cluster maximum is stale");
        }
    }
}

std::string PalindromeIndex::dump() const {
    std::ostringstream os;
    const auto s = text_.str();
    os << "text (" << s.size() << "): " << (s.size() <= 400 ? std::string(s) : std::string(s.substr(0, 400)) + "...")
       << "\n";
    for (int i = 0; i < schedule_.num_classes(); ++i) {
        const LmpQueue& q = q_[static_cast<std::size_t>(i)];
        const ClusterQueue& cq = cpp_[static_cast<std::size_t>(i)];
        if (q.by_start.empty() && cq.by_start.empty()) continue;
        os << "class " << i << " [" << schedule_.threshold(i) << "," << schedule_.threshold(i + 1) << "):";
        for (const auto& [st, e] : q.by_start) os << " " << to_string(Interval{st, e});
        for (const auto& [st, c] : cq.by_start) os << " " << to_string(c);
        os << "\n";
    }
    return os.str();
}

}  // namespace dynpal
