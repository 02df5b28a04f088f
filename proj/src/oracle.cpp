#include "dynpal/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dynpal::oracle {

namespace {

char at(std::string_view s, Pos i) { return s[static_cast<std::size_t>(i - 1)]; }

void require(std::string_view s, Pos i) {
    if (i < 1 || i > static_cast<Pos>(s.size())) {
        throw std::out_of_range("position " + std::to_string(i) + " outside text of length " +
                                std::to_string(s.size()));
    }
}

Interval span_of(Pos doubled, Pos r) {
    if (doubled % 2 == 0) return {doubled / 2 - r, doubled / 2 + r};
    return {doubled / 2 - r + 1, doubled / 2 + r};
}

OracleReport report_from_radii(const std::vector<Pos>& radii) {
    OracleReport rep;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const Interval iv = span_of(static_cast<Pos>(k) + 2, radii[k]);
        if (iv.empty()) continue;
        rep.maximal.push_back(iv);
        if (iv.length() > rep.longest.length ||
            (iv.length() == rep.longest.length && iv.start < rep.longest.start)) {
            rep.longest = {iv.start, iv.length()};
        }
    }
    std::sort(rep.maximal.begin(), rep.maximal.end());
    return rep;
}

}  // namespace

Pos naive_radius(std::string_view text, Pos d) {
    const Pos n = static_cast<Pos>(text.size());
    if (d < 2 || d > 2 * n) throw std::out_of_range("invalid center " + std::to_string(d));
    Pos r = 0;
    if (d % 2 == 0) {
        const Pos c = d / 2;
        while (c - r - 1 >= 1 && c + r + 1 <= n && at(text, c - r - 1) == at(text, c + r + 1)) ++r;
    } else {
        const Pos c = d / 2;
        while (c - r >= 1 && c + r + 1 <= n && at(text, c - r) == at(text, c + r + 1)) ++r;
    }
    return r;
}

OracleReport all_maximal_palindromes(std::string_view text) {
    const Pos n = static_cast<Pos>(text.size());
    std::vector<Pos> radii;
    for (Pos d = 2; d <= 2 * n; ++d) radii.push_back(naive_radius(text, d));
    return report_from_radii(radii);
}

std::vector<Pos> manacher_radii(std::string_view text) {
    const Pos n = static_cast<Pos>(text.size());
    std::vector<Pos> radii(n > 0 ? static_cast<std::size_t>(2 * n - 1) : 0);
    if (n == 0) return radii;
    // d1[i]: odd radius at 0-based i; d2[i]: even radius for the gap before i.
    std::vector<Pos> d1(static_cast<std::size_t>(n)), d2(static_cast<std::size_t>(n));
    for (Pos i = 0, l = 0, r = -1; i < n; ++i) {
        Pos k = (i > r) ? 1 : std::min(d1[static_cast<std::size_t>(l + r - i)], r - i + 1);
        while (i - k >= 0 && i + k < n && text[static_cast<std::size_t>(i - k)] == text[static_cast<std::size_t>(i + k)]) ++k;
        d1[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k;
            r = i + k;
        }
    }
    for (Pos i = 0, l = 0, r = -1; i < n; ++i) {
        Pos k = (i > r) ? 0 : std::min(d2[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n &&
               text[static_cast<std::size_t>(i - k - 1)] == text[static_cast<std::size_t>(i + k)]) {
            ++k;
        }
        d2[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k - 1;
            r = i + k;
        }
    }
    for (Pos c = 1; c <= n; ++c) radii[static_cast<std::size_t>(2 * c - 2)] = d1[static_cast<std::size_t>(c - 1)] - 1;
    // Even center between 1-based c and c+1 is the gap before 0-based c.
    for (Pos c = 1; c < n; ++c) radii[static_cast<std::size_t>(2 * c - 1)] = d2[static_cast<std::size_t>(c)];
    return radii;
}

OracleReport all_maximal_palindromes_fast(std::string_view text) {
    return report_from_radii(manacher_radii(text));
}

Longest longest(std::string_view text) {
    const auto radii = manacher_radii(text);
    Longest best;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const Interval iv = span_of(static_cast<Pos>(k) + 2, radii[k]);
        if (iv.empty()) continue;
        if (iv.length() > best.length || (iv.length() == best.length && iv.start < best.start)) {
            best = {iv.start, iv.length()};
        }
    }
    return best;
}

Pos naive_lcp(std::string_view text, Pos i, Pos j) {
    require(text, i);
    require(text, j);
    const Pos n = static_cast<Pos>(text.size());
    Pos l = 0;
    while (i + l <= n && j + l <= n && at(text, i + l) == at(text, j + l)) ++l;
    return l;
}

Pos naive_lcs_back(std::string_view text, Pos i, Pos j) {
    require(text, i);
    require(text, j);
    Pos l = 0;
    while (i - l >= 1 && j - l >= 1 && at(text, i - l) == at(text, j - l)) ++l;
    return l;
}

Pos naive_period(std::string_view text, Pos i, Pos j) {
    require(text, i);
    require(text, j);
    const Pos len = j - i + 1;
    for (Pos p = 1; p < len; ++p) {
        bool ok = true;
        for (Pos k = i; k + p <= j && ok; ++k) ok = at(text, k) == at(text, k + p);
        if (ok) return p;
    }
    return len;
}

bool is_palindrome(std::string_view text, Interval iv) {
    for (Pos a = iv.start, b = iv.end; a < b; ++a, --b) {
        if (at(text, a) != at(text, b)) return false;
    }
    return true;
}

}  // namespace dynpal::oracle
