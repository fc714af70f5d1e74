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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smartcar {

/// Simulation time in integer milliseconds. Primary logic never reads a wall clock.
using SimMillis = std::int64_t;

inline constexpr int kAdcMax = 1023;
inline constexpr std::size_t kSmsMaxChars = 160;

/// Thrown for malformed text input (config, scenario, NMEA coordinates).
/// `line()` is 1-based, or 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Thrown when a well-formed value breaks a domain invariant.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GeoFix {
  double latitude = 0.0;
  double longitude = 0.0;
  SimMillis timestamp_ms = 0;
  bool valid = false;
  int satellites = 0;

  bool operator==(const GeoFix&) const = default;
};

/// One sampling instant of the virtual sensor board. ADC channels are 10-bit
/// counts; rain_intensity grows with the amount of water on the plate.
struct SensorFrame {
  SimMillis t_ms = 0;
  int impact = 0;
  int panic = 0;
  int alcohol_raw = 0;
  int rain_wet = 0;
  int rain_intensity = 0;
  double temp_c = 0.0;
  double humidity_pct = 0.0;

  bool operator==(const SensorFrame&) const = default;
};

/// Throws ValidationError if any channel is out of range.
void validate(const SensorFrame& frame);

enum class AlertKind { Accident, Panic, Alcohol };

std::string_view to_string(AlertKind kind);

struct AlertMessage {
  AlertKind kind = AlertKind::Accident;
  std::string destination;
  std::string body;

  bool operator==(const AlertMessage&) const = default;
};

}  // namespace smartcar
