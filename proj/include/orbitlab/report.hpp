#pragma once

#include "orbitlab/serialize.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace orbitlab {

// Every number in a report carries one of these labels.
inline constexpr const char* kMeasured = "measured";
inline constexpr const char* kBound = "bound";
inline constexpr const char* kThreshold = "threshold";
inline constexpr const char* kDerived = "derived";
inline constexpr const char* kInput = "input";

/// JSON has no infinities; they become the strings "inf" / "-inf".
inline json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

struct Column {
  std::string name;
  std::string label;
  std::string scale;  // bounds only
};

struct Quantity {
  std::string name;
  std::string label;
  json value;
  std::string scale;  // bounds only
  json params;        // bounds only
};

struct Report {
  std::string kind;
  json inputs;
  std::vector<Column> columns;
  std::vector<std::vector<json>> rows;  // one per ladder entry, aligned with columns
  std::vector<Quantity> quantities;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::string> warnings;
  double slack = 0;
  double c0 = 1;
  json partial;  // null, or {"reason", "deepest_completed"} after a budget stop
  double wall_time = 0;

  [[nodiscard]] bool budget_exceeded() const { return !partial.is_null(); }

  void add(std::string name, const char* label, json value) {
    quantities.push_back({std::move(name), label, std::move(value), "", nullptr});
  }
  void add_bound(std::string name, const LogScaleValue& v, json params) {
    quantities.push_back({std::move(name), kBound, num(v.value), to_string(v.scale), std::move(params)});
  }
  void flag(std::string name, bool value) { flags.emplace_back(std::move(name), value); }
  [[nodiscard]] const Quantity* find(const std::string& name) const {
    for (const auto& q : quantities)
      if (q.name == name) return &q;
    return nullptr;
  }
  [[nodiscard]] std::optional<bool> find_flag(const std::string& name) const {
    for (const auto& [n, v] : flags)
      if (n == name) return v;
    return std::nullopt;
  }
};

inline json report_to_json(const Report& r) {
  json cols = json::array();
  for (const auto& c : r.columns) {
    json col{{"name", c.name}, {"label", c.label}};
    if (!c.scale.empty()) col["scale"] = c.scale;
    cols.push_back(col);
  }
  json qs = json::array();
  for (const auto& q : r.quantities) {
    json e{{"name", q.name}, {"label", q.label}, {"value", q.value}};
    if (!q.scale.empty()) e["scale"] = q.scale;
    if (!q.params.is_null()) e["params"] = q.params;
    qs.push_back(e);
  }
  json flags = json::array();
  for (const auto& [n, v] : r.flags) flags.push_back({{"name", n}, {"value", v}});
  return {{"kind", r.kind},
          {"inputs", r.inputs},
          {"ladder", {{"columns", cols}, {"rows", r.rows}}},
          {"quantities", qs},
          {"flags", flags},
          {"warnings", r.warnings},
          {"slack", r.slack},
          {"c0", r.c0},
          {"partial", r.partial},
          {"wall_time_s", r.wall_time}};
}

inline Report report_from_json(const json& j) {
  Report r;
  r.kind = j.at("kind").get<std::string>();
  r.inputs = j.at("inputs");
  for (const auto& c : j.at("ladder").at("columns"))
    r.columns.push_back({c.at("name").get<std::string>(), c.at("label").get<std::string>(), c.value("scale", "")});
  for (const auto& row : j.at("ladder").at("rows")) r.rows.push_back(row.get<std::vector<json>>());
  for (const auto& q : j.at("quantities"))
    r.quantities.push_back({q.at("name").get<std::string>(), q.at("label").get<std::string>(), q.at("value"),
                            q.value("scale", ""), q.value("params", json())});
  for (const auto& f : j.at("flags")) r.flags.emplace_back(f.at("name").get<std::string>(), f.at("value").get<bool>());
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.slack = j.at("slack").get<double>();
  r.c0 = j.at("c0").get<double>();
  r.partial = j.at("partial");
  r.wall_time = j.at("wall_time_s").get<double>();
  return r;
}

namespace detail {

inline std::string csv_cell(const json& v) {
  std::string s = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

inline std::string text_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace detail

/// CSV: one row per ladder entry; reports without a ladder list their quantities.
inline void emit_csv(const Report& r, std::ostream& os) {
  if (!r.columns.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << detail::csv_cell(r.columns[i].name);
    os << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  os << "name,label,scale,value\n";
  for (const auto& q : r.quantities)
    os << detail::csv_cell(q.name) << ',' << q.label << ',' << q.scale << ',' << detail::csv_cell(q.value) << '\n';
}

inline void emit_text(const Report& r, std::ostream& os) {
  os << "report " << r.kind << '\n';
  os << "slack " << json(r.slack).dump() << '\n';
  os << "c0 " << json(r.c0).dump() << '\n';
  if (r.budget_exceeded()) os << "partial " << r.partial.dump() << '\n';
  for (const auto& [n, v] : r.flags) os << "flag " << n << " = " << (v ? "true" : "false") << '\n';
  for (const auto& w : r.warnings) os << "warning " << w << '\n';
  for (const auto& q : r.quantities) {
    os << q.label << ' ' << q.name << " = " << detail::text_value(q.value);
    if (!q.scale.empty()) os << " [" << q.scale << ']';
    os << '\n';
  }
  if (!r.columns.empty()) {
    os << "ladder\n";
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "\t" : "") << r.columns[i].name;
    os << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << detail::text_value(row[i]);
      os << '\n';
    }
  }
  os << "wall_time_s " << json(r.wall_time).dump() << '\n';
}

inline void emit_report(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << report_to_json(r).dump(2) << '\n';
  } else if (format == "csv") {
    emit_csv(r, os);
  } else if (format == "text") {
    emit_text(r, os);
  } else {
    throw ConfigError("unknown format '" + format + "'");
  }
}

inline std::string emit_report(const Report& r, const std::string& format) {
  std::ostringstream os;
  emit_report(r, format, os);
  return os.str();
}

}  // namespace orbitlab
