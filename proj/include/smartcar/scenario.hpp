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
#include <variant>
#include <vector>

#include "smartcar/types.hpp"

namespace smartcar::sim {

namespace ev {
/// One SW420 sample; applies to the frame of the tick it is delivered on.
struct Impact {
  int level = 0;
  bool operator==(const Impact&) const = default;
};
/// Button level; held until the next panic event.
struct Panic {
  int level = 0;
  bool operator==(const Panic&) const = default;
};
struct Alcohol {
  int counts = 0;
  bool operator==(const Alcohol&) const = default;
};
struct Rain {
  int wet = 0;
  int intensity = 0;
  bool operator==(const Rain&) const = default;
};
struct Cabin {
  double temp_c = 0.0;
  double humidity_pct = 0.0;
  bool operator==(const Cabin&) const = default;
};
/// Raw NMEA line forwarded byte-exact by the virtual receiver.
struct GpsLine {
  std::string text;
  bool operator==(const GpsLine&) const = default;
};
/// Position for the virtual receiver to start reporting.
struct GpsFix {
  double latitude = 0.0;
  double longitude = 0.0;
  bool operator==(const GpsFix&) const = default;
};
struct SmsIn {
  std::string sender;
  std::string body;
  bool operator==(const SmsIn&) const = default;
};
struct ModemErrorOnce {
  bool operator==(const ModemErrorOnce&) const = default;
};
struct ModemSilentFor {
  SimMillis duration_ms = 0;
  bool operator==(const ModemSilentFor&) const = default;
};
}  // namespace ev

using EventPayload = std::variant<ev::Impact, ev::Panic, ev::Alcohol, ev::Rain, ev::Cabin, ev::GpsLine, ev::GpsFix,
                                  ev::SmsIn, ev::ModemErrorOnce, ev::ModemSilentFor>;

struct ScenarioEvent {
  SimMillis t_ms = 0;
  EventPayload event;
  int source_line = 0;

  bool operator==(const ScenarioEvent&) const = default;
};

/// Parses `t=<ms> <event> <args...>` lines:
///
///   impact <0|1>            panic <0|1>           alcohol <counts>
///   rain <wet> <intensity>  cabin <temp_c> <hum>  gps <raw NMEA line>
///   fix <lat> <lon>         sms <sender> <body>   fault error_once
///   fault silent <ms>
///
/// `#` comments and blank lines are skipped. The result is stably sorted by
/// time. Throws ParseError carrying the 1-based line number.
std::vector<ScenarioEvent> load_scenario(std::string_view source);

/// Inverse of load_scenario for one event (without the newline).
std::string render_event(const ScenarioEvent& event);

}  // namespace smartcar::sim
