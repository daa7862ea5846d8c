#ifndef DIRAC1D_IO_FORMAT_HPP
#define DIRAC1D_IO_FORMAT_HPP

#include <string>
#include <vector>

namespace dirac1d {

// Deterministic numeric formatting for all emitted files: 14 significant
// digits, forced scientific below 1e-3 so Table-style comparisons keep
// their precision.
std::string fmt_number(double v);

std::string join_csv(const std::vector<std::string>& fields);

void write_text_file(const std::string& path, const std::string& content);

// FNV-1a over the canonical config text; stamped into output headers.
std::string config_hash(const std::string& canonical_text);

}  // namespace dirac1d

#endif
