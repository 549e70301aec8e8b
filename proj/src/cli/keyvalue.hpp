#pragma once

// Flat key-value documents used for config and scenario files:
//
//   # comment
//   mass = 1e15
//   charge-over-M = 0.3
//
// One `key = value` per line. Keys are the long option names of the
// subcommand being run (underscores are accepted for dashes).

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bhinfo::cli {

class KeyValueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Throws KeyValueError on malformed lines or repeated keys.
KeyValues parse_key_values(std::istream& in);
KeyValues read_key_value_file(const std::string& path);

}  // namespace bhinfo::cli
