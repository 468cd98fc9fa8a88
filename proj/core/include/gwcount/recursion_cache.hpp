#pragma once

#include "gwcount/invariants.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>

namespace gwcount {

// Cache format: one "d N_d" line per degree, d = 1, 2, ... strictly
// increasing by one, decimal values, no blank lines.

struct CacheLoadOptions {
    // Seeds the choice of the spot-checked entry; unset draws from std::random_device.
    std::optional<std::uint64_t> seed;
    // Re-derive every entry instead of one random entry.
    bool verify_all = false;
};

/// Parses and validates a cache stream. Throws CacheError naming the failing line.
RecursionTable read_recursion_cache(std::istream& in, const CacheLoadOptions& options = {});

RecursionTable load_recursion_cache(const std::filesystem::path& path,
                                    const CacheLoadOptions& options = {});

void write_recursion_cache(std::ostream& out, const RecursionTable& table);

/// Writes atomically via a sibling temporary file.
void save_recursion_cache(const std::filesystem::path& path, const RecursionTable& table);

}  // namespace gwcount
