#include "dynpal/lce.hpp"

#include <stdexcept>
#include <string>

namespace dynpal {

namespace {

void require_position(const DynamicText& t, Pos i) {
    if (i < 1 || i > t.size()) {
        throw std::out_of_range("position " + std::to_string(i) + " outside text of length " +
                                std::to_string(t.size()));
    }
}

}  // namespace

bool LceEngine::decide(const Fingerprint& a, const Fingerprint& b) {
    ++stats_.comparisons;
    const bool eq0 = a.layer[0] == b.layer[0];
    const bool eq1 = a.layer[1] == b.layer[1];
    if (eq0 != eq1) ++stats_.layer_disagreements;
    return eq0 && eq1;
}

void LceEngine::check_decision(bool decided, bool truth, const char* what) {
    if (decided != truth) {
        throw HashCollisionError(std::string("fingerprint decision disagrees with characters in ") + what);
    }
}

// The predicate is monotone: true for a prefix of lengths [0..answer] and
// false beyond. Gallop to bracket the answer, then bisect.
template <typename Pred>
Pos LceEngine::longest_true(Pos max_len, Pred&& matches) {
    if (max_len <= 0) return 0;
    Pos lo = 0;  // known true
    Pos step = 1;
    Pos hi = max_len + 1;  // known false (or past the end)
    while (lo + step <= max_len) {
        if (matches(lo + step)) {
            lo += step;
            step *= 2;
        } else {
            hi = lo + step;
            break;
        }
    }
    if (hi == max_len + 1 && lo < max_len) {
        if (matches(max_len)) return max_len;
        hi = max_len;
    }
    while (hi - lo > 1) {
        const Pos mid = lo + (hi - lo) / 2;
        if (matches(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

Pos LceEngine::lcp(const DynamicText& t, Pos i, Pos j) {
    require_position(t, i);
    require_position(t, j);
    ++stats_.queries;
    const Pos n = t.size();
    if (i == j) return n - i + 1;
    if (t.char_at(i) != t.char_at(j)) return 0;
    const Pos max_len = n - std::max(i, j) + 1;
    auto matches = [&](Pos len) {
        const bool d = decide(t.fingerprint_fwd(i, i + len - 1), t.fingerprint_fwd(j, j + len - 1));
        if (verify_) check_decision(d, t.str().substr(i - 1, len) == t.str().substr(j - 1, len), "lcp");
        return d;
    };
    return longest_true(max_len, matches);
}

Pos LceEngine::lcs_back(const DynamicText& t, Pos i, Pos j) {
    require_position(t, i);
    require_position(t, j);
    ++stats_.queries;
    if (i == j) return i;
    if (t.char_at(i) != t.char_at(j)) return 0;
    const Pos max_len = std::min(i, j);
    auto matches = [&](Pos len) {
        const bool d = decide(t.fingerprint_fwd(i - len + 1, i), t.fingerprint_fwd(j - len + 1, j));
        if (verify_) {
            check_decision(d, t.str().substr(i - len, len) == t.str().substr(j - len, len), "lcs_back");
        }
        return d;
    };
    return longest_true(max_len, matches);
}

Pos LceEngine::palindrome_radius(const DynamicText& t, Center center) {
    const Pos n = t.size();
    if (!center.valid_for(n)) {
        throw std::out_of_range("center " + std::to_string(center.doubled()) + " (doubled) invalid for length " +
                                std::to_string(n));
    }
    ++stats_.queries;
    // right arm starts at rs, left arm ends at le; the arms grow outward.
    Pos rs, le, max_r;
    if (center.is_odd()) {
        const Pos c = center.doubled() / 2;
        rs = c + 1;
        le = c - 1;
        max_r = std::min(c - 1, n - c);
    } else {
        const Pos c = center.doubled() / 2;
        rs = c + 1;
        le = c;
        max_r = std::min(c, n - c);
    }
    if (max_r == 0 || t.char_at(rs) != t.char_at(le)) return 0;
    auto matches = [&](Pos r) {
        const bool d = decide(t.fingerprint_fwd(rs, rs + r - 1), t.fingerprint_rev(le - r + 1, le));
        if (verify_) {
            bool truth = true;
            for (Pos k = 0; k < r && truth; ++k) truth = t.char_at(rs + k) == t.char_at(le - k);
            check_decision(d, truth, "palindrome_radius");
        }
        return d;
    };
    return longest_true(max_r, matches);
}

}  // namespace dynpal
