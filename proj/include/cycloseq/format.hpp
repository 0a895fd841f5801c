#pragma once

#include "cycloseq/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cycloseq {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view format_version = "cycloseq-output/1";

enum class OutputFormat { json, csv, pretty };

/// Shape of the payload; decides the CSV and pretty layouts.
///   scalar        object of named values
///   distribution  object index -> count, index name in `index`
///   records       array of flat objects sharing their keys
///   matrices      array of {kind, fixed_index, row_labels, column_labels, rows}
enum class PayloadKind { scalar, distribution, records, matrices };

inline std::string_view name(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::scalar: return "scalar";
    case PayloadKind::distribution: return "distribution";
    case PayloadKind::records: return "records";
    case PayloadKind::matrices: return "matrices";
  }
  return "?";
}

inline PayloadKind parse_payload_kind(std::string_view text) {
  for (auto k : {PayloadKind::scalar, PayloadKind::distribution, PayloadKind::records,
                 PayloadKind::matrices})
    if (name(k) == text) return k;
  throw std::invalid_argument("unknown payload kind '" + std::string(text) + "'");
}

/// Everything one command prints. All leaf values are strings, so counts of
/// any size and reals survive a round trip unchanged.
struct Envelope {
  std::string command;
  Json parameters = Json::object();
  std::string provenance;  // closed-form | oracle | both
  PayloadKind kind = PayloadKind::scalar;
  std::string index;       // distribution index name
  Json payload = Json::object();

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

/// Shortest round-trip decimal form of a double.
inline std::string format_real(double v) {
  char buf[40];
  for (int precision = 6; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::string emit_json(const Envelope& e) {
  Json doc;
  doc["format"] = format_version;
  doc["command"] = e.command;
  doc["parameters"] = e.parameters;
  doc["provenance"] = e.provenance;
  doc["kind"] = name(e.kind);
  if (e.kind == PayloadKind::distribution) doc["index"] = e.index;
  doc["payload"] = e.payload;
  return doc.dump(2) + "\n";
}

inline Envelope parse_json(std::string_view text) {
  const Json doc = Json::parse(text);
  if (doc.at("format") != format_version)
    throw std::invalid_argument("unsupported output format tag");
  Envelope e;
  e.command = doc.at("command").get<std::string>();
  e.parameters = doc.at("parameters");
  e.provenance = doc.at("provenance").get<std::string>();
  e.kind = parse_payload_kind(doc.at("kind").get<std::string>());
  if (e.kind == PayloadKind::distribution) e.index = doc.at("index").get<std::string>();
  e.payload = doc.at("payload");
  return e;
}

/// Header plus rows of cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

inline std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

/// Flat tabular view of a payload. Matrices become long form
/// (kind, fixed_index, row, column, value) with every cell listed.
inline Table to_table(const Envelope& e) {
  Table t;
  switch (e.kind) {
    case PayloadKind::scalar: {
      auto& row = t.rows.emplace_back();
      for (const auto& [k, v] : e.payload.items()) {
        t.header.push_back(k);
        row.push_back(cell_text(v));
      }
      break;
    }
    case PayloadKind::distribution:
      t.header = {e.index, "count"};
      for (const auto& [k, v] : e.payload.items()) t.rows.push_back({k, cell_text(v)});
      break;
    case PayloadKind::records:
      for (const auto& rec : e.payload) {
        if (t.header.empty())
          for (const auto& [k, v] : rec.items()) t.header.push_back(k);
        auto& row = t.rows.emplace_back();
        for (const auto& k : t.header) row.push_back(rec.contains(k) ? cell_text(rec.at(k)) : "");
      }
      break;
    case PayloadKind::matrices:
      t.header = {"kind", "fixed_index", "row", "column", "value"};
      for (const auto& m : e.payload) {
        const auto& rl = m.at("row_labels");
        const auto& cl = m.at("column_labels");
        for (std::size_t r = 0; r < rl.size(); ++r)
          for (std::size_t c = 0; c < cl.size(); ++c)
            t.rows.push_back({cell_text(m.at("kind")), cell_text(m.at("fixed_index")),
                              cell_text(rl[r]), cell_text(cl[c]), cell_text(m.at("rows")[r][c])});
      }
      break;
  }
  return t;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string emit_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

inline Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (any || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    lines.push_back(std::move(row));
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  Table t;
  if (lines.empty()) return t;
  t.header = std::move(lines.front());
  t.rows.assign(std::make_move_iterator(lines.begin() + 1), std::make_move_iterator(lines.end()));
  return t;
}

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

inline std::string aligned(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string l;
    for (std::size_t c = 0; c < cells.size(); ++c) l += (c ? "  " : "") + pad_left(cells[c], width[c]);
    out += l + "\n";
  };
  line(t.header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') + "\n";
  for (const auto& r : t.rows) line(r);
  return out;
}

/// Wide records read better as one "key: value" block per record.
inline std::string record_blocks(const Table& t) {
  std::size_t kw = 0;
  for (const auto& h : t.header) kw = std::max(kw, h.size());
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += "\n";
    for (std::size_t c = 0; c < t.header.size() && c < t.rows[r].size(); ++c)
      out += t.header[c] + ":" + std::string(kw - t.header[c].size() + 1, ' ') + t.rows[r][c] + "\n";
  }
  return out;
}

/// Grid with row labels down the side and column labels across; zero cells
/// are left blank.
inline std::string matrix_grid(const Json& m) {
  const auto& rl = m.at("row_labels");
  const auto& cl = m.at("column_labels");
  const auto& rows = m.at("rows");
  std::size_t w = 2;
  for (const auto& r : rows)
    for (const auto& v : r) w = std::max(w, cell_text(v).size());
  for (const auto& c : cl) w = std::max(w, cell_text(c).size());
  std::size_t lw = 1;
  for (const auto& r : rl) lw = std::max(lw, cell_text(r).size());
  std::string out = std::string(lw, ' ') + " |";
  for (const auto& c : cl) out += " " + pad_left(cell_text(c), w);
  out += "\n" + std::string(lw + 2 + cl.size() * (w + 1), '-') + "\n";
  for (std::size_t r = 0; r < rl.size(); ++r) {
    std::string line = pad_left(cell_text(rl[r]), lw) + " |";
    for (std::size_t c = 0; c < cl.size(); ++c) {
      const std::string v = cell_text(rows[r][c]);
      line += " " + pad_left(v == "0" ? "" : v, w);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

inline std::string emit_pretty(const Envelope& e) {
  std::string out = e.command;
  for (const auto& [k, v] : e.parameters.items()) out += " " + k + "=" + cell_text(v);
  out += "  [" + e.provenance + "]\n";
  switch (e.kind) {
    case PayloadKind::scalar:
      for (const auto& [k, v] : e.payload.items()) out += k + ": " + cell_text(v) + "\n";
      break;
    case PayloadKind::distribution:
      out += detail::aligned(to_table(e));
      break;
    case PayloadKind::records: {
      const Table t = to_table(e);
      out += t.header.size() > 4 ? detail::record_blocks(t) : detail::aligned(t);
      break;
    }
    case PayloadKind::matrices:
      for (const auto& m : e.payload) {
        out += "\n" + cell_text(m.at("label")) + "\n";
        out += detail::matrix_grid(m);
      }
      break;
  }
  return out;
}

inline std::string emit(const Envelope& e, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return emit_json(e);
    case OutputFormat::csv: return emit_csv(to_table(e));
    case OutputFormat::pretty: return emit_pretty(e);
  }
  return {};
}

}  // namespace cycloseq
