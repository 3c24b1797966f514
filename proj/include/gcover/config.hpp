#pragma once

#include <cstdint>

namespace gcover {

enum class OutputMode { json, table };

// Runtime knobs shared by the counting kernels and the CLI.
struct Config {
    // Brute-force enumeration refuses once |G|^(2g+n) exceeds this.
    std::uint64_t brute_force_cutoff = 100000000ull;  // 10^8
    // 0 means "auto" (hardware concurrency).
    int threads = 0;
    OutputMode output = OutputMode::json;
};

}  // namespace gcover
