#include "dynpal/hashed_text.hpp"

#include <random>
#include <stdexcept>

namespace dynpal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMod = DynamicText::kModulus;

inline u64 reduce(u128 x) {
    u64 r = static_cast<u64>(x & kMod) + static_cast<u64>(x >> 61);
    r = (r & kMod) + (r >> 61);
    return r >= kMod ? r - kMod : r;
}

inline u64 mul(u64 a, u64 b) { return reduce(static_cast<u128>(a) * b); }

inline u64 add_mod(u64 a, u64 b) {
    u64 r = a + b;
    return r >= kMod ? r - kMod : r;
}

inline u64 sub_mod(u64 a, u64 b) { return a >= b ? a - b : a + kMod - b; }

u64 power(u64 b, u64 e) {
    u64 r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::array<u64, 2> draw_bases(u64 seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(1u << 10, kMod - 2);
    u64 b0 = dist(rng);
    u64 b1 = dist(rng);
    while (b1 == b0) b1 = dist(rng);
    return {b0, b1};
}

}  // namespace

DynamicText::DynamicText(std::string_view input, std::uint64_t seed)
    : DynamicText(input, draw_bases(seed)) {}

DynamicText::DynamicText(std::string_view input, std::array<std::uint64_t, 2> bases)
    : chars_(input) {
    base_[0] = bases[0];
    base_[1] = bases[1];
    init();
}

DynamicText DynamicText::with_same_parameters(std::string_view input) const {
    return DynamicText(input, std::array<std::uint64_t, 2>{base_[0], base_[1]});
}

void DynamicText::init() {
    const std::size_t n = chars_.size();
    for (int l = 0; l < 2; ++l) {
        pow_[l].assign(n + 2, 1);
        inv_pow_[l].assign(n + 2, 1);
        const u64 inv_base = power(base_[l], kMod - 2);
        for (std::size_t k = 1; k < n + 2; ++k) {
            pow_[l][k] = mul(pow_[l][k - 1], base_[l]);
            inv_pow_[l][k] = mul(inv_pow_[l][k - 1], inv_base);
        }
    }
    // Linear-time Fenwick construction: place terms, then push each node into
    // its parent.
    fwd_.assign(n + 1, Pair{});
    rev_.assign(n + 1, Pair{});
    for (std::size_t k = 1; k <= n; ++k) {
        fwd_[k] = term(static_cast<unsigned char>(chars_[k - 1]), static_cast<Pos>(k));
        rev_[k] = term(static_cast<unsigned char>(chars_[n - k]), static_cast<Pos>(k));
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t parent = k + (k & (~k + 1));
        if (parent <= n) {
            for (int l = 0; l < 2; ++l) {
                fwd_[parent].v[l] = add_mod(fwd_[parent].v[l], fwd_[k].v[l]);
                rev_[parent].v[l] = add_mod(rev_[parent].v[l], rev_[k].v[l]);
            }
        }
    }
}

DynamicText::Pair DynamicText::term(unsigned char c, Pos k) const {
    Pair p;
    for (int l = 0; l < 2; ++l) p.v[l] = mul(static_cast<u64>(c) + 1, pow_[l][static_cast<std::size_t>(k)]);
    return p;
}

unsigned char DynamicText::char_at(Pos i) const {
    if (i < 1 || i > size()) throw std::out_of_range("position " + std::to_string(i) + " outside text of length " + std::to_string(size()));
    return static_cast<unsigned char>(chars_[static_cast<std::size_t>(i - 1)]);
}

void DynamicText::substitute(Pos i, unsigned char c) {
    const unsigned char old = char_at(i);
    if (old == c) return;
    const Pos n = size();
    const Pair told = term(old, i), tnew = term(c, i);
    const Pair rold = term(old, n + 1 - i), rnew = term(c, n + 1 - i);
    Pair df, dr;
    for (int l = 0; l < 2; ++l) {
        df.v[l] = sub_mod(tnew.v[l], told.v[l]);
        dr.v[l] = sub_mod(rnew.v[l], rold.v[l]);
    }
    add(fwd_, i, df);
    add(rev_, n + 1 - i, dr);
    chars_[static_cast<std::size_t>(i - 1)] = static_cast<char>(c);
}

void DynamicText::add(std::vector<Pair>& tree, Pos i, const Pair& delta) {
    for (auto k = static_cast<std::size_t>(i); k < tree.size(); k += k & (~k + 1)) {
        for (int l = 0; l < 2; ++l) tree[k].v[l] = add_mod(tree[k].v[l], delta.v[l]);
    }
}

DynamicText::Pair DynamicText::prefix(const std::vector<Pair>& tree, Pos i) const {
    Pair acc;
    for (auto k = static_cast<std::size_t>(i); k > 0; k &= k - 1) {
        for (int l = 0; l < 2; ++l) acc.v[l] = add_mod(acc.v[l], tree[k].v[l]);
    }
    return acc;
}

void DynamicText::check_range(Pos i, Pos j) const {
    if (j < i - 1 || i < 1 || j > size()) {
        throw std::out_of_range("interval [" + std::to_string(i) + ".." + std::to_string(j) +
                                "] outside text of length " + std::to_string(size()));
    }
}

Fingerprint DynamicText::normalize(const std::vector<Pair>& tree, Pos from, Pos to) const {
    Fingerprint fp;
    if (to < from) return fp;
    const Pair hi = prefix(tree, to);
    const Pair lo = prefix(tree, from - 1);
    for (int l = 0; l < 2; ++l) {
        fp.layer[l] = mul(sub_mod(hi.v[l], lo.v[l]), inv_pow_[l][static_cast<std::size_t>(from)]);
    }
    return fp;
}

Fingerprint DynamicText::fingerprint_fwd(Pos i, Pos j) const {
    check_range(i, j);
    return normalize(fwd_, i, j);
}

Fingerprint DynamicText::fingerprint_rev(Pos i, Pos j) const {
    check_range(i, j);
    const Pos n = size();
    return normalize(rev_, n + 1 - j, n + 1 - i);
}

}  // namespace dynpal
