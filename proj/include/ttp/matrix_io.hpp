#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ttp/exact_matrix.hpp"

namespace ttp {

// Matrix text format: one row per line, whitespace-separated entries, each an
// optionally signed integer or p/q. Lines starting with '#' and blank lines
// are ignored. The matrix must be square.

ExactMatrix parse_matrix(std::string_view text);
ExactMatrix read_matrix_file(const std::filesystem::path& path);

/// Columns right-aligned to the widest entry; one trailing newline.
std::string format_matrix(const ExactMatrix& m);

}  // namespace ttp
