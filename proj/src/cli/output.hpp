#pragma once

// Rendering of results as table, JSON or CSV. Every number goes through
// format_number, so the three formats carry identical digits.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bhinfo::cli {

enum class Format { table, json, csv };

std::optional<Format> parse_format(const std::string& s);

// Scientific notation, 9 significant digits.
std::string format_number(double v);
// Scientific notation, 17 significant digits; round-trips any double.
std::string format_exact(double v);

using Value = std::variant<double, std::string, bool>;

struct Field {
  // Dotted path, e.g. "bounds.universal.limit"; nested objects in JSON.
  std::string path;
  Value value;
  std::string unit;
  bool exact = false;
};

struct Document {
  std::vector<Field> fields;

  void add(std::string path, double v, std::string unit = {});
  void add_exact(std::string path, double v, std::string unit = {});
  void add(std::string path, std::string v);
  void add(std::string path, const char* v) { add(std::move(path), std::string(v)); }
  void add(std::string path, bool v);
};

struct Column {
  std::string name;
  std::string unit;
};

struct Series {
  std::vector<Column> columns;
  std::vector<std::vector<Value>> rows;
  // Emitted with JSON and table output only; CSV stays purely tabular.
  Document summary;
};

void render(const Document& doc, Format f, std::ostream& out);
void render(const Series& series, Format f, std::ostream& out);

}  // namespace bhinfo::cli
