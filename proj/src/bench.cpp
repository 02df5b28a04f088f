#include "dynpal/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "dynpal/oracle.hpp"
#include "dynpal/palindrome_index.hpp"

namespace dynpal {

const char* to_string(BenchMode m) { return m == BenchMode::dynamic ? "dynamic" : "recompute"; }

BenchResult run_bench(std::string_view text, const std::vector<Edit>& edits, BenchMode mode, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    BenchResult r;
    r.n = static_cast<Pos>(text.size());
    r.updates = edits.size();
    r.mode = mode;

    clock::time_point t0, t1;
    if (mode == BenchMode::dynamic) {
        PalindromeIndex idx = PalindromeIndex::build(text, {.seed = seed});
        t0 = clock::now();
        for (const Edit& e : edits) {
            idx.substitute(e.pos, e.symbol);
            r.final_longest = idx.longest();
        }
        t1 = clock::now();
        if (!edits.empty()) {
            r.queue_ops = static_cast<double>(idx.total().queue_ops) / static_cast<double>(edits.size());
            r.lce_ops = static_cast<double>(idx.total().lce_ops) / static_cast<double>(edits.size());
        }
        if (edits.empty()) r.final_longest = idx.longest();
    } else {
        std::string s(text);
        t0 = clock::now();
        for (const Edit& e : edits) {
            s[static_cast<std::size_t>(e.pos - 1)] = static_cast<char>(e.symbol);
            r.final_longest = oracle::longest(s);
        }
        t1 = clock::now();
        if (edits.empty()) r.final_longest = oracle::longest(s);
    }
    r.total_s = std::chrono::duration<double>(t1 - t0).count();
    r.per_update_us = edits.empty() ? 0.0 : r.total_s * 1e6 / static_cast<double>(edits.size());
    return r;
}

std::string csv_row(const BenchResult& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%lld,%llu,%s,%.6f,%.3f,%.1f,%.1f", static_cast<long long>(r.n),
                  static_cast<unsigned long long>(r.updates), to_string(r.mode), r.total_s, r.per_update_us,
                  r.queue_ops, r.lce_ops);
    return buf;
}

std::vector<Edit> random_edits(Pos n, std::size_t count, int alphabet, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Pos> pos(1, n);
    std::uniform_int_distribution<int> sym(0, alphabet - 1);
    std::vector<Edit> out(count);
    for (Edit& e : out) e = {pos(rng), static_cast<unsigned char>('a' + sym(rng))};
    return out;
}

std::string random_text(Pos n, int alphabet, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sym(0, alphabet - 1);
    std::string s(static_cast<std::size_t>(n), 'a');
    for (char& ch : s) ch = static_cast<char>('a' + sym(rng));
    return s;
}

}  // namespace dynpal
