#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynpal/types.hpp"

namespace dynpal {

// Substring signature under both hash layers. Each component is the value
// sum_{k} (symbol_k + 1) * base^k mod (2^61 - 1), normalized so that the first
// symbol of the substring carries weight base^0.
struct Fingerprint {
    std::uint64_t layer[2] = {0, 0};

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Mutable byte string with forward and reverse Karp-Rabin fingerprints kept
// in Fenwick trees. Point substitution and substring fingerprint are both
// O(log n). Positions are 1-based.
//
// Single writer: a substitution needs exclusive access; concurrent readers
// are fine between substitutions.
class DynamicText {
public:
    static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

    DynamicText() : DynamicText(std::string_view{}, 0) {}
    DynamicText(std::string_view input, std::uint64_t seed);

    Pos size() const { return static_cast<Pos>(chars_.size()); }

    // Throws std::out_of_range unless 1 <= i <= size().
    unsigned char char_at(Pos i) const;

    // Flank comparison with sentinels: a position outside [1..n] matches
    // nothing, not even another out-of-range position.
    bool same_symbol(Pos i, Pos j) const {
        if (i < 1 || j < 1 || i > size() || j > size()) return false;
        return chars_[static_cast<std::size_t>(i - 1)] == chars_[static_cast<std::size_t>(j - 1)];
    }

    void substitute(Pos i, unsigned char c);

    // Fingerprint of D[i..j]; j = i - 1 yields the empty fingerprint.
    Fingerprint fingerprint_fwd(Pos i, Pos j) const;
    // Fingerprint of D[j] D[j-1] ... D[i], i.e. D[i..j] read backwards. Equals
    // fingerprint_fwd of the mirrored interval of the reversed text.
    Fingerprint fingerprint_rev(Pos i, Pos j) const;

    std::string_view str() const { return chars_; }
    std::array<std::uint64_t, 2> bases() const { return {base_[0], base_[1]}; }

    // Same hash parameters, different content. Used for mirror-law checks.
    DynamicText with_same_parameters(std::string_view input) const;

private:
    struct Pair {
        std::uint64_t v[2] = {0, 0};
    };

    DynamicText(std::string_view input, std::array<std::uint64_t, 2> bases);
    void init();
    void check_range(Pos i, Pos j) const;
    Pair prefix(const std::vector<Pair>& tree, Pos i) const;
    void add(std::vector<Pair>& tree, Pos i, const Pair& delta);
    Pair term(unsigned char c, Pos k) const;
    Fingerprint normalize(const std::vector<Pair>& tree, Pos from, Pos to) const;

    std::string chars_;
    std::uint64_t base_[2] = {0, 0};
    std::vector<std::uint64_t> pow_[2];
    std::vector<std::uint64_t> inv_pow_[2];
    std::vector<Pair> fwd_;  // Fenwick tree over chars_
    std::vector<Pair> rev_;  // Fenwick tree over reversed chars_
};

}  // namespace dynpal
