#include "relaysec/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace relaysec {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<SchemeId> parse_scheme_list(std::string_view text) {
  std::vector<SchemeId> schemes;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (!item.empty()) {
      const auto scheme = parse_scheme(item);
      if (!scheme) throw std::invalid_argument("unknown scheme '" + std::string(item) + "'");
      if (std::find(schemes.begin(), schemes.end(), *scheme) == schemes.end()) {
        schemes.push_back(*scheme);
      }
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (schemes.empty()) throw std::invalid_argument("scheme list is empty");
  return schemes;
}

void set_config_value(SweepSpec& spec, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "variable") {
    if (value == "mer_db") {
      spec.variable = SweepVariable::MerDb;
    } else if (value == "relay_count") {
      spec.variable = SweepVariable::RelayCount;
    } else {
      throw std::invalid_argument("variable must be mer_db or relay_count, got '" +
                                  std::string(value) + "'");
    }
  } else if (key == "from") {
    spec.from = parse_number<double>(key, value);
  } else if (key == "to") {
    spec.to = parse_number<double>(key, value);
  } else if (key == "step") {
    spec.step = parse_number<double>(key, value);
  } else if (key == "mer_db") {
    spec.fixed.mer_db = parse_number<double>(key, value);
  } else if (key == "alpha_si") {
    spec.fixed.alpha_si = parse_number<double>(key, value);
  } else if (key == "alpha_id") {
    spec.fixed.alpha_id = parse_number<double>(key, value);
  } else if (key == "alpha_ie") {
    spec.fixed.alpha_ie = parse_number<double>(key, value);
  } else if (key == "relay_count") {
    spec.fixed.relay_count = parse_number<std::size_t>(key, value);
  } else if (key == "power") {
    spec.fixed.power = parse_number<double>(key, value);
  } else if (key == "noise_var") {
    spec.fixed.noise_var = parse_number<double>(key, value);
  } else if (key == "schemes") {
    spec.schemes = parse_scheme_list(value);
  } else if (key == "trials") {
    spec.trials = parse_number<std::uint64_t>(key, value);
  } else if (key == "seed") {
    spec.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "confidence_level") {
    spec.confidence_level = parse_number<double>(key, value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

std::vector<std::string> apply_config(std::istream& in, SweepSpec& spec) {
  std::vector<std::string> keys;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    try {
      const std::string_view key = trim(view.substr(0, eq));
      set_config_value(spec, key, view.substr(eq + 1));
      keys.emplace_back(key);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return keys;
}

std::vector<std::string> apply_config_file(const std::string& path, SweepSpec& spec) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  return apply_config(in, spec);
}

}  // namespace relaysec
