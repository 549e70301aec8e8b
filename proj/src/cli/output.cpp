#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace bhinfo::cli {
namespace {

using nlohmann::ordered_json;

std::string printf_double(const char* fmt, double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string render_value(const Value& v, bool exact) {
  if (const double* d = std::get_if<double>(&v)) {
    return exact ? format_exact(*d) : format_number(*d);
  }
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

// JSON text for a value. Non-finite numbers become strings since JSON has no
// literal for them.
std::string json_value(const Value& v, bool exact) {
  if (const double* d = std::get_if<double>(&v)) {
    if (!std::isfinite(*d)) return ordered_json(render_value(v, exact)).dump();
    return exact ? format_exact(*d) : format_number(*d);
  }
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return ordered_json(std::get<std::string>(v)).dump();
}

// Minimal tree keyed by path segments, preserving insertion order.
struct Node {
  std::string key;
  const Field* leaf = nullptr;
  std::vector<Node> children;

  Node& child(const std::string& k) {
    for (auto& c : children) {
      if (c.key == k) return c;
    }
    children.push_back(Node{k, nullptr, {}});
    return children.back();
  }
};

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : path) {
    if (ch == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool has_units(const Node& n) {
  if (n.leaf) return !n.leaf->unit.empty();
  return std::any_of(n.children.begin(), n.children.end(), has_units);
}

void write_node(const Node& n, bool units, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (units ? !has_units(n) : n.children.empty()) {
    out << "{}";
    return;
  }
  out << "{\n";
  bool first = true;
  for (const auto& c : n.children) {
    if (units && !has_units(c)) continue;
    if (!first) out << ",\n";
    first = false;
    out << pad << "  " << ordered_json(c.key).dump() << ": ";
    if (c.leaf) {
      out << (units ? ordered_json(c.leaf->unit).dump()
                    : json_value(c.leaf->value, c.leaf->exact));
    } else {
      write_node(c, units, out, indent + 2);
    }
  }
  out << "\n" << pad << "}";
}

Node build_tree(const Document& doc) {
  Node root;
  for (const auto& f : doc.fields) {
    Node* n = &root;
    for (const auto& part : split_path(f.path)) n = &n->child(part);
    n->leaf = &f;
  }
  return root;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render_table(const Document& doc, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& f : doc.fields) width = std::max(width, f.path.size());
  for (const auto& f : doc.fields) {
    out << f.path << std::string(width - f.path.size() + 2, ' ')
        << render_value(f.value, f.exact);
    if (!f.unit.empty()) out << "  " << f.unit;
    out << "\n";
  }
}

void write_json_document(const Document& doc, std::ostream& out, int indent) {
  const Node root = build_tree(doc);
  const std::string pad(indent, ' ');
  out << "{\n" << pad << "  \"values\": ";
  write_node(root, false, out, indent + 2);
  out << ",\n" << pad << "  \"units\": ";
  write_node(root, true, out, indent + 2);
  out << "\n" << pad << "}";
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string format_number(double v) { return printf_double("%.8e", v); }

std::string format_exact(double v) { return printf_double("%.16e", v); }

void Document::add(std::string path, double v, std::string unit) {
  fields.push_back({std::move(path), v, std::move(unit), false});
}

void Document::add_exact(std::string path, double v, std::string unit) {
  fields.push_back({std::move(path), v, std::move(unit), true});
}

void Document::add(std::string path, std::string v) {
  fields.push_back({std::move(path), std::move(v), {}, false});
}

void Document::add(std::string path, bool v) {
  fields.push_back({std::move(path), v, {}, false});
}

void render(const Document& doc, Format f, std::ostream& out) {
  switch (f) {
    case Format::table:
      render_table(doc, out);
      break;
    case Format::json:
      write_json_document(doc, out, 0);
      out << "\n";
      break;
    case Format::csv:
      out << "field,value,unit\n";
      for (const auto& field : doc.fields) {
        out << csv_escape(field.path) << ','
            << csv_escape(render_value(field.value, field.exact)) << ','
            << csv_escape(field.unit) << "\n";
      }
      break;
  }
}

void render(const Series& series, Format f, std::ostream& out) {
  switch (f) {
    case Format::csv: {
      for (std::size_t i = 0; i < series.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(series.columns[i].name);
      }
      out << "\n";
      for (const auto& row : series.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ',';
          out << csv_escape(render_value(row[i], false));
        }
        out << "\n";
      }
      break;
    }
    case Format::json: {
      out << "{\n  \"summary\": ";
      write_json_document(series.summary, out, 2);
      out << ",\n  \"columns\": [";
      for (std::size_t i = 0; i < series.columns.size(); ++i) {
        if (i) out << ", ";
        out << ordered_json(series.columns[i].name).dump();
      }
      out << "],\n  \"units\": [";
      for (std::size_t i = 0; i < series.columns.size(); ++i) {
        if (i) out << ", ";
        out << ordered_json(series.columns[i].unit).dump();
      }
      out << "],\n  \"rows\": [";
      for (std::size_t r = 0; r < series.rows.size(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        const auto& row = series.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ", ";
          out << json_value(row[i], false);
        }
        out << "]";
      }
      out << (series.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
      break;
    }
    case Format::table: {
      if (!series.summary.fields.empty()) {
        render_table(series.summary, out);
        out << "\n";
      }
      std::vector<std::size_t> width(series.columns.size());
      std::vector<std::string> header(series.columns.size());
      for (std::size_t i = 0; i < series.columns.size(); ++i) {
        header[i] = series.columns[i].name;
        if (!series.columns[i].unit.empty()) {
          header[i] += " [" + series.columns[i].unit + "]";
        }
        width[i] = header[i].size();
      }
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : series.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          line.push_back(render_value(row[i], false));
          width[i] = std::max(width[i], line.back().size());
        }
      }
      auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) out << "  ";
          out << line[i] << std::string(width[i] - line[i].size(), ' ');
        }
        out << "\n";
      };
      emit(header);
      for (const auto& line : cells) emit(line);
      break;
    }
  }
}

}  // namespace bhinfo::cli
