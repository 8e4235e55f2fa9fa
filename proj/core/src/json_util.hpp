#pragma once

// Internal JSON helpers shared by the module implementations.  ordered_json
// keeps object keys in insertion order so emitted artifacts are byte-stable
// across runs.

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

namespace scv::detail {

using ordered_json = nlohmann::ordered_json;

// Parses `text`, wrapping nlohmann's exception in `Error` with `context`
// prepended so callers see which file or line was bad.
template <typename Error>
ordered_json parse_json(const std::string& text, const std::string& context) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(context + ": " + e.what());
  }
}

template <typename Error>
std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error("read failed for " + path.string());
  }
  return buffer.str();
}

template <typename Error>
void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out << contents;
  out.flush();
  if (!out) {
    throw Error("write failed for " + path.string());
  }
}

// Writes via a temp file in the same directory, then renames over the target
// so readers never observe a half-written file.
template <typename Error>
void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  write_file<Error>(tmp, contents);
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error("rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
  }
}

// Calls `fn(line, line_number)` for each line of `path`, skipping blank
// lines.  Line numbers are 1-based.
template <typename Error>
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(const std::string&, int)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    fn(line, number);
  }
  if (in.bad()) {
    throw Error("read failed for " + path.string());
  }
}

}  // namespace scv::detail
