#pragma once

// Helpers for driving the maj-confine binary from tests.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace clitest {

inline std::filesystem::path workdir() {
    std::filesystem::path dir(MAJ_CONFINE_WORKDIR);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path path_for(const std::string& name) { return workdir() / name; }

/// Runs `maj-confine <args>` with stdout and stderr captured to files
/// named after `tag`; returns the exit status.
inline int run(const std::string& args, const std::string& tag = "last") {
    const auto out = path_for(tag + ".stdout");
    const auto err = path_for(tag + ".stderr");
    const std::string command =
        std::string("'") + MAJ_CONFINE_BIN + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string stdout_of(const std::string& tag = "last") { return read_file(path_for(tag + ".stdout")); }
inline std::string stderr_of(const std::string& tag = "last") { return read_file(path_for(tag + ".stderr")); }

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

/// Non-comment lines of a CSV or JSON-lines file; the first is the column
/// header for CSV.
inline std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

/// Comment lines starting with "# <key>:", without the prefix.
inline std::string header_value(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    const std::string prefix = "# " + key + ": ";
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    return {};
}

}  // namespace clitest
