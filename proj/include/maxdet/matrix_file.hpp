#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "maxdet/sign_matrix.hpp"

namespace maxdet {

// Text format: a "pm1 <rows> <cols>" header, then `rows` lines of exactly
// `cols` '+'/'-' characters, then optional '#' comment lines.
SignMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const SignMatrix& m, const std::vector<std::string>& comments = {});

SignMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const SignMatrix& m,
                       const std::vector<std::string>& comments = {});

}  // namespace maxdet
