#include "relaysec/emit.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace relaysec {
namespace {

using nlohmann::json;

std::string probability(double p) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.10g", p);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string optional_probability(const std::optional<double>& p) {
  return p ? probability(*p) : std::string();
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << to_string(r.scheme) << ',' << r.relay_count << ',' << shortest(r.mer_db) << ','
        << shortest(r.alpha_si) << ',' << shortest(r.alpha_id) << ',' << shortest(r.alpha_ie)
        << ',' << probability(r.analytic) << ',' << optional_probability(r.mc_p_hat) << ','
        << optional_probability(r.mc_ci_low) << ',' << optional_probability(r.mc_ci_high) << ','
        << r.trials << ',' << r.seed << '\n';
  }
}

void write_json(std::ostream& out, std::span<const SweepRow> rows) {
  json doc = json::array();
  for (const SweepRow& r : rows) {
    doc.push_back({{"scheme", to_string(r.scheme)},
                   {"relay_count", r.relay_count},
                   {"mer_db", r.mer_db},
                   {"alpha_si", r.alpha_si},
                   {"alpha_id", r.alpha_id},
                   {"alpha_ie", r.alpha_ie},
                   {"analytic", r.analytic},
                   {"mc_p_hat", optional_json(r.mc_p_hat)},
                   {"mc_ci_low", optional_json(r.mc_ci_low)},
                   {"mc_ci_high", optional_json(r.mc_ci_high)},
                   {"trials", r.trials},
                   {"seed", r.seed}});
  }
  out << doc.dump(2) << '\n';
}

std::vector<SweepRow> parse_json_rows(std::string_view text) {
  const json doc = json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("expected a JSON array of rows");
  std::vector<SweepRow> rows;
  rows.reserve(doc.size());
  for (const json& obj : doc) {
    SweepRow r;
    const auto scheme = parse_scheme(obj.at("scheme").get<std::string>());
    if (!scheme) throw std::invalid_argument("unknown scheme in JSON row");
    r.scheme = *scheme;
    r.relay_count = obj.at("relay_count").get<std::size_t>();
    r.mer_db = obj.at("mer_db").get<double>();
    r.alpha_si = obj.at("alpha_si").get<double>();
    r.alpha_id = obj.at("alpha_id").get<double>();
    r.alpha_ie = obj.at("alpha_ie").get<double>();
    r.analytic = obj.at("analytic").get<double>();
    r.mc_p_hat = optional_from(obj, "mc_p_hat");
    r.mc_ci_low = optional_from(obj, "mc_ci_low");
    r.mc_ci_high = optional_from(obj, "mc_ci_high");
    r.trials = obj.at("trials").get<std::uint64_t>();
    r.seed = obj.at("seed").get<std::uint64_t>();
    rows.push_back(r);
  }
  return rows;
}

void emit(std::span<const SweepRow> rows, OutputFormat format, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("nothing to emit: no rows");
  auto write = [&](std::ostream& out) {
    if (format == OutputFormat::Csv) {
      write_csv(out, rows);
    } else {
      write_json(out, rows);
    }
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace relaysec
