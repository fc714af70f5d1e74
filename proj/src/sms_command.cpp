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

#include "smartcar/sms_command.hpp"

#include <array>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "text_util.hpp"

namespace smartcar::sms {

namespace {

constexpr std::array<std::pair<std::string_view, QueryKind>, 5> kKeywords = {{
    {"STATUS", QueryKind::Status},
    {"TEMP", QueryKind::Temp},
    {"HUM", QueryKind::Hum},
    {"LOC", QueryKind::Loc},
    {"HELP", QueryKind::Help},
}};

// Negative zero would render as "-0.0".
double no_negative_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string format_temp(double celsius) { return fmt::format("{:.1f}", no_negative_zero(std::round(celsius * 10.0) / 10.0)); }

long format_humidity(double pct) { return std::lround(pct); }

std::string clip(std::string text) {
  if (text.size() > kSmsMaxChars) text.resize(kSmsMaxChars);
  return text;
}

}  // namespace

Query parse_query(std::string_view body) {
  const auto trimmed = detail::trim(body);
  const auto upper = detail::to_upper(trimmed);
  for (const auto& [word, kind] : kKeywords) {
    if (upper == word) return {kind, std::string(trimmed)};
  }
  return {QueryKind::Unknown, std::string(trimmed)};
}

std::string_view keyword(QueryKind kind) {
  for (const auto& [word, k] : kKeywords) {
    if (k == kind) return word;
  }
  return {};
}

std::string format_coordinates(const GeoFix& fix) {
  return fmt::format("{:.6f},{:.6f}", no_negative_zero(fix.latitude), no_negative_zero(fix.longitude));
}

std::string format_location(const nmea::GpsState& gps, SimMillis now_ms, SimMillis stale_ms) {
  if (!nmea::has_fresh_fix(gps, now_ms, stale_ms)) return std::string(kUnknownLocation);
  const auto coords = format_coordinates(*gps.last_fix);
  return fmt::format("{} {}{}", coords, kMapsUrlPrefix, coords);
}

std::string format_reply(const Query& query, const SensorFrame& frame, const nmea::GpsState& gps,
                         const Config& config, bool engine_enabled) {
  switch (query.kind) {
    case QueryKind::Temp:
      return clip(fmt::format("TEMP={}C", format_temp(frame.temp_c)));
    case QueryKind::Hum:
      return fmt::format("HUM={}%", format_humidity(frame.humidity_pct));
    case QueryKind::Loc:
      return "LOC=" + format_location(gps, frame.t_ms, config.gps_stale_ms);
    case QueryKind::Status:
      // A cabin temperature wide enough to overflow 160 chars is not physical,
      // but the budget is enforced regardless.
      return clip(fmt::format("TEMP={}C HUM={}% ALC={} RAIN={} ENGINE={}", format_temp(frame.temp_c),
                              format_humidity(frame.humidity_pct), frame.alcohol_raw, frame.rain_wet ? "WET" : "DRY",
                              engine_enabled ? "ENABLED" : "DISABLED"));
    case QueryKind::Help:
      return "CMDS: STATUS TEMP HUM LOC HELP";
    case QueryKind::Unknown:
      break;
  }
  return "UNKNOWN CMD. SEND HELP";
}

AlertMessage format_alert(AlertKind kind, const nmea::GpsState& gps, const Config& config, SimMillis now_ms) {
  std::string_view prefix;
  std::string destination = config.alert_primary_number;
  switch (kind) {
    case AlertKind::Accident:
      prefix = "ACCIDENT DETECTED";
      break;
    case AlertKind::Panic:
      prefix = "PANIC BUTTON PRESSED";
      break;
    case AlertKind::Alcohol:
      prefix = "ALCOHOL LIMIT EXCEEDED. Vehicle interlock engaged";
      destination = config.alert_safety_number;
      break;
  }
  return {kind, std::move(destination),
          fmt::format("{}. Location: {}", prefix, format_location(gps, now_ms, config.gps_stale_ms))};
}

}  // namespace smartcar::sms
