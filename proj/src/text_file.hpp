#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace evomt::detail {

// Whole-file read in binary mode; throws IoFailure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

// Splits on LF and strips one trailing CR per line. A final empty line after a
// terminating LF is not reported.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split_fields(std::string_view line, char sep);

}  // namespace evomt::detail
