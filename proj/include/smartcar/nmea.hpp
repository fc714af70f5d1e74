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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smartcar/types.hpp"

namespace smartcar::nmea {

enum class SentenceKind { Gga, Rmc, Unsupported };

struct Sentence {
  SentenceKind kind = SentenceKind::Unsupported;
  /// Comma-separated fields between '$' and '*'; fields[0] is the address ("GPGGA").
  std::vector<std::string> raw_fields;
  bool checksum_ok = false;

  bool operator==(const Sentence&) const = default;
};

struct GpsState {
  std::optional<GeoFix> last_fix;
  SimMillis last_update_ms = 0;

  bool operator==(const GpsState&) const = default;
};

enum class FixOutcome {
  Accepted,
  BadChecksum,
  Unsupported,
  NoFix,         // GGA quality 0 or RMC status 'V'
  BadCoordinates,
};

struct FixUpdate {
  GpsState state;
  FixOutcome outcome = FixOutcome::Unsupported;
};

/// XOR of every byte in `payload`.
unsigned char xor_checksum(std::string_view payload);

/// True iff `line` is `$<payload>*hh` (optionally followed by CR/LF) and hh
/// is the XOR of the payload bytes. Never throws.
bool validate_checksum(std::string_view line);

/// Converts NMEA `ddmm.mmmm` / `dddmm.mmmm` plus hemisphere to signed degrees.
/// Throws ParseError on malformed text, minutes >= 60, or an out-of-range result.
double to_decimal_degrees(std::string_view raw, char hemisphere);

/// Total: never throws, whatever the input bytes.
Sentence parse_sentence(std::string_view line);

/// Merges a sentence into the receiver state. Only checksummed GGA (quality > 0)
/// and RMC (status 'A') sentences with decodable coordinates change the state.
FixUpdate update_fix(const GpsState& state, const Sentence& sentence, SimMillis now_ms);

/// True when a valid fix exists that is no older than `stale_ms` at `now_ms`.
bool has_fresh_fix(const GpsState& state, SimMillis now_ms, SimMillis stale_ms);

/// Renders `|deg|` as NMEA `ddmm.mmmmm` (5 minute decimals) with 2 or 3 degree
/// digits, plus the hemisphere letter. Used by the virtual receiver.
std::pair<std::string, char> to_nmea_coordinate(double degrees, bool is_latitude);

/// Wraps a payload as `$payload*HH`.
std::string frame_sentence(std::string_view payload);

}  // namespace smartcar::nmea
