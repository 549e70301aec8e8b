#include "cli/keyvalue.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

namespace bhinfo::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_key(const std::string& key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  });
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw KeyValueError("line " + std::to_string(number) +
                          ": expected `key = value`");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (!valid_key(key)) {
      throw KeyValueError("line " + std::to_string(number) + ": bad key `" +
                          key + "`");
    }
    if (value.empty()) {
      throw KeyValueError("line " + std::to_string(number) + ": empty value");
    }
    const bool repeated = std::any_of(out.begin(), out.end(),
                                      [&](const auto& kv) { return kv.first == key; });
    if (repeated) {
      throw KeyValueError("line " + std::to_string(number) + ": repeated key `" +
                          key + "`");
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

KeyValues read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KeyValueError("cannot open " + path);
  return parse_key_values(in);
}

}  // namespace bhinfo::cli
