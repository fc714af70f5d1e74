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

#pragma once

#include <string>
#include <string_view>

#include "smartcar/config.hpp"
#include "smartcar/nmea.hpp"
#include "smartcar/types.hpp"

namespace smartcar::sms {

enum class QueryKind { Status, Temp, Hum, Loc, Help, Unknown };

struct Query {
  QueryKind kind = QueryKind::Unknown;
  /// The trimmed input, kept for Unknown queries.
  std::string original;

  bool operator==(const Query&) const = default;
};

inline constexpr std::string_view kMapsUrlPrefix = "https://maps.google.com/?q=";
inline constexpr std::string_view kUnknownLocation = "UNKNOWN (no GPS fix)";

Query parse_query(std::string_view body);

/// Keyword for a known query kind ("STATUS", ...); empty for Unknown.
std::string_view keyword(QueryKind kind);

/// "<lat>,<lon>" at 6 decimals.
std::string format_coordinates(const GeoFix& fix);

/// "<lat>,<lon> https://maps.google.com/?q=<lat>,<lon>" or the unknown-location text.
std::string format_location(const nmea::GpsState& gps, SimMillis now_ms, SimMillis stale_ms);

/// Reply text for a remote query. `frame.t_ms` is taken as the current time
/// when judging fix freshness. Always at most 160 characters.
std::string format_reply(const Query& query, const SensorFrame& frame, const nmea::GpsState& gps,
                         const Config& config, bool engine_enabled);

AlertMessage format_alert(AlertKind kind, const nmea::GpsState& gps, const Config& config, SimMillis now_ms);

}  // namespace smartcar::sms
