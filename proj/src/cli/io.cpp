#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "deid/error.hpp"
#include "deid/text.hpp"

namespace deid::cli {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, std::string_view contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("failed writing " + path.string());
}

bool has_extension(const fs::path& path, std::string_view extension) {
    return text::lowercase(path.extension().string()) == text::lowercase(extension);
}

std::vector<fs::path> list_files(const fs::path& dir, std::string_view extension) {
    if (!fs::is_directory(dir)) throw Error(dir.string() + " is not a directory");
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && has_extension(entry.path(), extension)) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace deid::cli
