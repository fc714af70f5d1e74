/*
 * Copyright (c) 2026 The smartcar-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "smartcar/config.hpp"

#include <algorithm>
#include <functional>
#include <variant>
#include <vector>

#include <fmt/format.h>

#include "text_util.hpp"

namespace smartcar {

namespace {

using FieldRef = std::variant<std::string Config::*, int Config::*, SimMillis Config::*, bool Config::*>;

struct Field {
  std::string_view key;
  FieldRef member;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      {"alert_primary_number", &Config::alert_primary_number},
      {"alert_safety_number", &Config::alert_safety_number},
      {"alcohol_threshold", &Config::alcohol_threshold},
      {"alcohol_release", &Config::alcohol_release},
      {"alcohol_cutoff_while_running", &Config::alcohol_cutoff_while_running},
      {"impact_window_ms", &Config::impact_window_ms},
      {"impact_min_high", &Config::impact_min_high},
      {"impact_refractory_ms", &Config::impact_refractory_ms},
      {"panic_refractory_ms", &Config::panic_refractory_ms},
      {"gps_stale_ms", &Config::gps_stale_ms},
      {"gps_wait_ms", &Config::gps_wait_ms},
      {"sms_retry_max", &Config::sms_retry_max},
      {"sms_retry_backoff_ms", &Config::sms_retry_backoff_ms},
      {"sms_ok_timeout_ms", &Config::sms_ok_timeout_ms},
      {"wiper_intermittent_max", &Config::wiper_intermittent_max},
      {"wiper_low_max", &Config::wiper_low_max},
      {"tick_ms", &Config::tick_ms},
  };
  return table;
}

bool is_phone_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return !s.empty() && s.size() <= 20 &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

void assign(Config& config, const Field& field, std::string_view value, int line) {
  const auto bad = [&](std::string_view expected) {
    return ParseError(fmt::format("{}: expected {}, got '{}'", field.key, expected, value), line);
  };
  std::visit(
      [&](auto member) {
        using T = std::remove_reference_t<decltype(config.*member)>;
        if constexpr (std::is_same_v<T, std::string>) {
          config.*member = std::string(value);
        } else if constexpr (std::is_same_v<T, bool>) {
          if (value == "true" || value == "1") {
            config.*member = true;
          } else if (value == "false" || value == "0") {
            config.*member = false;
          } else {
            throw bad("true/false");
          }
        } else {
          auto parsed = detail::parse_int<T>(value);
          if (!parsed) throw bad("an integer");
          config.*member = *parsed;
        }
      },
      field.member);
}

}  // namespace

void validate(const Config& c) {
  if (!is_phone_number(c.alert_primary_number)) {
    throw ValidationError("alert_primary_number: not a phone number");
  }
  if (!is_phone_number(c.alert_safety_number)) {
    throw ValidationError("alert_safety_number: not a phone number");
  }
  if (c.alcohol_threshold < 0 || c.alcohol_threshold > kAdcMax) {
    throw ValidationError("alcohol_threshold: outside 0..1023");
  }
  if (c.alcohol_release < 0 || c.alcohol_release >= c.alcohol_threshold) {
    throw ValidationError("alcohol_release must be below alcohol_threshold (alcohol_release, alcohol_threshold)");
  }
  if (c.wiper_intermittent_max < 0 || c.wiper_intermittent_max >= c.wiper_low_max) {
    throw ValidationError(
        "wiper_intermittent_max must be below wiper_low_max (wiper_intermittent_max, wiper_low_max)");
  }
  if (c.wiper_low_max > kAdcMax) {
    throw ValidationError("wiper_low_max must be below 1024 (wiper_low_max)");
  }
  if (c.impact_min_high < 1) throw ValidationError("impact_min_high: must be at least 1");
  if (c.sms_retry_max < 0) throw ValidationError("sms_retry_max: must not be negative");
  const std::pair<std::string_view, SimMillis> durations[] = {
      {"impact_window_ms", c.impact_window_ms},
      {"impact_refractory_ms", c.impact_refractory_ms},
      {"panic_refractory_ms", c.panic_refractory_ms},
      {"gps_stale_ms", c.gps_stale_ms},
      {"gps_wait_ms", c.gps_wait_ms},
      {"sms_retry_backoff_ms", c.sms_retry_backoff_ms},
      {"sms_ok_timeout_ms", c.sms_ok_timeout_ms},
      {"tick_ms", c.tick_ms},
  };
  for (const auto& [key, value] : durations) {
    if (value <= 0) throw ValidationError(fmt::format("{}: duration must be positive", key));
  }
}

Config load_config(std::string_view source) {
  Config config;
  int line_no = 0;
  for (auto raw : detail::split_lines(source)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(fmt::format("expected 'key = value', got '{}'", line), line_no);
    }
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Field& f) { return f.key == key; });
    if (it == table.end()) continue;
    assign(config, *it, value, line_no);
  }
  validate(config);
  return config;
}

std::string serialize_config(const Config& config) {
  std::string out;
  for (const auto& field : fields()) {
    std::visit(
        [&](auto member) {
          const auto& value = config.*member;
          using T = std::decay_t<decltype(value)>;
          if constexpr (std::is_same_v<T, bool>) {
            out += fmt::format("{} = {}\n", field.key, value ? "true" : "false");
          } else {
            out += fmt::format("{} = {}\n", field.key, value);
          }
        },
        field.member);
  }
  return out;
}

}  // namespace smartcar
