#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dynpal/types.hpp"

namespace dynpal {

enum class BenchMode { dynamic, recompute };

struct Edit {
    Pos pos = 0;
    unsigned char symbol = 0;
};

struct BenchResult {
    Pos n = 0;
    std::uint64_t updates = 0;
    BenchMode mode = BenchMode::dynamic;
    double total_s = 0;
    double per_update_us = 0;
    double queue_ops = 0;  // mean per update; 0 in recompute mode
    double lce_ops = 0;
    Longest final_longest;
};

inline constexpr std::string_view kBenchCsvHeader = "n,updates,mode,total_s,per_update_us,queue_ops,lce_ops";

const char* to_string(BenchMode m);

// Applies the edits in order and queries the longest palindrome after each.
// Dynamic mode builds the index once (untimed) and times only updates plus
// queries; recompute mode reruns the linear oracle after every edit.
BenchResult run_bench(std::string_view text, const std::vector<Edit>& edits, BenchMode mode,
                      std::uint64_t seed = 0);

std::string csv_row(const BenchResult& r);

// Uniformly random edits over the first `alphabet` lowercase letters.
std::vector<Edit> random_edits(Pos n, std::size_t count, int alphabet, std::uint64_t seed);
std::string random_text(Pos n, int alphabet, std::uint64_t seed);

}  // namespace dynpal
