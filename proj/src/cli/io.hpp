#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace deid::cli {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Regular files in `dir` with the given extension (case-insensitive), sorted.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir, std::string_view extension);

bool has_extension(const std::filesystem::path& path, std::string_view extension);

} // namespace deid::cli
