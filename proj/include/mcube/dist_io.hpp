#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcube/dist.hpp"

namespace mcube {

// Raised on unreadable, unwritable or malformed files (CLI exit code 3).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value table with no distribution validation; estimate tables may carry
// negative entries and decomposition outputs are sub-normalized.
struct RawTable {
    int n = 1;
    std::vector<double> values;
};

enum class TableFormat { Mcd1, Json };

// MCD1: magic "MCD1", n as 4-byte little-endian unsigned, then 2^n IEEE-754
// little-endian doubles in ascending mask order. Bit-exact round trip.
void write_table(const std::filesystem::path& path, int n, const std::vector<double>& values,
                 TableFormat format = TableFormat::Mcd1);

// Reads either format (sniffed by magic). JSON is only accepted for n <= 16.
RawTable read_table(const std::filesystem::path& path);

// read_table plus distribution validation.
DenseDistribution read_distribution(const std::filesystem::path& path,
                                    int dense_cap = kDenseCapDefault);

}  // namespace mcube
