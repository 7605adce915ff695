#include "hybridom/emit.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "hybridom/errors.hpp"

namespace hybridom {
namespace {

using nlohmann::ordered_json;

std::string csv_field(const Cell& c) {
  if (const double* v = std::get_if<double>(&c)) return format_number(*v);
  return std::string(to_string(std::get<Sentinel>(c)));
}

ordered_json json_cell(const Cell& c) {
  if (const double* v = std::get_if<double>(&c)) return *v;
  return std::string(to_string(std::get<Sentinel>(c)));
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

std::string to_csv(const SweepResult& r) {
  const SweepMetadata& m = r.metadata;
  std::string out;
  auto meta = [&out](std::string_view k, const std::string& v) {
    out += "# ";
    out.append(k);
    out += ": ";
    out += v;
    out += '\n';
  };
  meta("schema_version", std::to_string(m.schema_version));
  meta("version", m.version);
  meta("name", m.name);
  if (!m.description.empty()) meta("description", m.description);
  meta("squeezing_db", m.squeezing_db_convention);
  meta("gain_db", m.gain_db_convention);
  meta("axis", m.axis.empty() ? "single point" : m.axis);
  meta("omega", format_number(m.omega));
  meta("base", m.base);
  for (const auto& [label, def] : m.series) meta("series " + label, def);

  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) out += ',';
    out += r.columns[i];
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepResult& r) {
  const SweepMetadata& m = r.metadata;
  ordered_json j;
  j["schema_version"] = m.schema_version;
  ordered_json meta;
  meta["name"] = m.name;
  meta["description"] = m.description;
  meta["version"] = m.version;
  meta["conventions"] = {{"squeezing_db", m.squeezing_db_convention}, {"gain_db", m.gain_db_convention}};
  meta["axis"] = m.axis;
  meta["omega"] = m.omega;
  meta["base"] = m.base;
  ordered_json series = ordered_json::array();
  for (const auto& [label, def] : m.series) series.push_back({{"label", label}, {"params", def}});
  meta["series"] = series;
  j["metadata"] = meta;
  j["columns"] = r.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json jr = ordered_json::array();
    for (const Cell& c : row) jr.push_back(json_cell(c));
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

SweepResult from_json(std::string_view text) {
  SweepResult r;
  try {
    const ordered_json j = ordered_json::parse(text);
    SweepMetadata& m = r.metadata;
    m.schema_version = j.at("schema_version").get<int>();
    if (m.schema_version != kSchemaVersion) {
      throw ConfigError("unsupported schema_version " + std::to_string(m.schema_version), "<json>");
    }
    const ordered_json& meta = j.at("metadata");
    m.name = meta.at("name").get<std::string>();
    m.description = meta.at("description").get<std::string>();
    m.version = meta.at("version").get<std::string>();
    m.squeezing_db_convention = meta.at("conventions").at("squeezing_db").get<std::string>();
    m.gain_db_convention = meta.at("conventions").at("gain_db").get<std::string>();
    m.axis = meta.at("axis").get<std::string>();
    m.omega = meta.at("omega").get<double>();
    m.base = meta.at("base").get<std::string>();
    for (const auto& s : meta.at("series")) {
      m.series.emplace_back(s.at("label").get<std::string>(), s.at("params").get<std::string>());
    }
    r.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& jr : j.at("rows")) {
      std::vector<Cell> row;
      for (const auto& c : jr) {
        if (c.is_number()) {
          row.emplace_back(c.get<double>());
        } else {
          const auto s = parse_sentinel(c.get<std::string>());
          if (!s) throw ConfigError("unknown sentinel '" + c.get<std::string>() + "'", "<json>");
          row.emplace_back(*s);
        }
      }
      if (row.size() != r.columns.size()) throw ConfigError("row width does not match columns", "<json>");
      r.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what(), "<json>");
  }
  return r;
}

void emit(const SweepResult& r, Format format, const std::filesystem::path& path) {
  const std::string body = format == Format::Csv ? to_csv(r) : to_json(r);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.close();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace hybridom
