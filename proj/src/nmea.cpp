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

#include "smartcar/nmea.hpp"

#include <cmath>
#include <cstdint>

#include <fmt/format.h>

#include "text_util.hpp"

namespace smartcar::nmea {

namespace {

std::string_view strip_line_end(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  return line;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return !s.empty();
}

SentenceKind classify(std::string_view address) {
  if (address == "GPGGA" || address == "GNGGA") return SentenceKind::Gga;
  if (address == "GPRMC" || address == "GNRMC") return SentenceKind::Rmc;
  return SentenceKind::Unsupported;
}

const std::string& field(const Sentence& s, std::size_t index) {
  static const std::string empty;
  return index < s.raw_fields.size() ? s.raw_fields[index] : empty;
}

char hemisphere_of(const std::string& f) { return f.size() == 1 ? f.front() : '\0'; }

}  // namespace

unsigned char xor_checksum(std::string_view payload) {
  unsigned char sum = 0;
  for (char c : payload) sum ^= static_cast<unsigned char>(c);
  return sum;
}

bool validate_checksum(std::string_view line) {
  line = strip_line_end(line);
  if (line.size() < 4 || line.front() != '$') return false;
  const auto star = line.find('*');
  if (star == std::string_view::npos || line.size() - star != 3) return false;
  const int hi = hex_value(line[star + 1]);
  const int lo = hex_value(line[star + 2]);
  if (hi < 0 || lo < 0) return false;
  return xor_checksum(line.substr(1, star - 1)) == hi * 16 + lo;
}

double to_decimal_degrees(std::string_view raw, char hemisphere) {
  const bool latitude = hemisphere == 'N' || hemisphere == 'S';
  if (!latitude && hemisphere != 'E' && hemisphere != 'W') {
    throw ParseError(fmt::format("bad hemisphere '{}'", hemisphere));
  }
  const auto dot = raw.find('.');
  const auto int_part = raw.substr(0, dot);
  const auto frac_part = dot == std::string_view::npos ? std::string_view{} : raw.substr(dot + 1);
  if (int_part.size() < 4 || int_part.size() > 5 || !all_digits(int_part) ||
      (dot != std::string_view::npos && !frac_part.empty() && !all_digits(frac_part))) {
    throw ParseError(fmt::format("bad coordinate '{}'", raw));
  }
  const auto deg_digits = int_part.size() - 2;
  const int degrees = *detail::parse_int<int>(int_part.substr(0, deg_digits));
  auto minutes_text = raw.substr(deg_digits);
  if (minutes_text.back() == '.') minutes_text.remove_suffix(1);
  const auto minutes = detail::parse_double(minutes_text);
  if (!minutes || *minutes >= 60.0) throw ParseError(fmt::format("bad minutes in '{}'", raw));

  const double value = degrees + *minutes / 60.0;
  if (value > (latitude ? 90.0 : 180.0)) throw ParseError(fmt::format("coordinate out of range '{}'", raw));
  if (value == 0.0) return 0.0;
  return (hemisphere == 'S' || hemisphere == 'W') ? -value : value;
}

Sentence parse_sentence(std::string_view line) {
  Sentence out;
  out.checksum_ok = validate_checksum(line);
  line = strip_line_end(line);
  if (line.empty() || line.front() != '$') return out;
  auto payload = line.substr(1);
  if (const auto star = payload.find('*'); star != std::string_view::npos) payload = payload.substr(0, star);
  for (auto f : detail::split(payload, ',')) out.raw_fields.emplace_back(f);
  out.kind = classify(out.raw_fields.front());
  return out;
}

FixUpdate update_fix(const GpsState& state, const Sentence& sentence, SimMillis now_ms) {
  FixUpdate result{state, FixOutcome::Unsupported};
  if (!sentence.checksum_ok) {
    result.outcome = FixOutcome::BadChecksum;
    return result;
  }

  // GGA: 1 time, 2-3 lat, 4-5 lon, 6 quality, 7 satellites.
  // RMC: 1 time, 2 status, 3-4 lat, 5-6 lon.
  std::size_t lat_index = 0;
  int satellites = 0;
  switch (sentence.kind) {
    case SentenceKind::Gga: {
      const auto quality = detail::parse_int<int>(field(sentence, 6));
      if (!quality || *quality <= 0) {
        result.outcome = FixOutcome::NoFix;
        return result;
      }
      satellites = detail::parse_int<int>(field(sentence, 7)).value_or(0);
      if (satellites < 0) satellites = 0;
      lat_index = 2;
      break;
    }
    case SentenceKind::Rmc:
      if (field(sentence, 2) != "A") {
        result.outcome = FixOutcome::NoFix;
        return result;
      }
      lat_index = 3;
      break;
    case SentenceKind::Unsupported:
      return result;
  }

  GeoFix fix;
  try {
    fix.latitude = to_decimal_degrees(field(sentence, lat_index), hemisphere_of(field(sentence, lat_index + 1)));
    fix.longitude =
        to_decimal_degrees(field(sentence, lat_index + 2), hemisphere_of(field(sentence, lat_index + 3)));
  } catch (const ParseError&) {
    result.outcome = FixOutcome::BadCoordinates;
    return result;
  }
  const char lat_hemi = hemisphere_of(field(sentence, lat_index + 1));
  const char lon_hemi = hemisphere_of(field(sentence, lat_index + 3));
  if ((lat_hemi != 'N' && lat_hemi != 'S') || (lon_hemi != 'E' && lon_hemi != 'W')) {
    result.outcome = FixOutcome::BadCoordinates;
    return result;
  }
  fix.timestamp_ms = now_ms;
  fix.valid = true;
  fix.satellites = satellites;
  result.state.last_fix = fix;
  result.state.last_update_ms = now_ms;
  result.outcome = FixOutcome::Accepted;
  return result;
}

bool has_fresh_fix(const GpsState& state, SimMillis now_ms, SimMillis stale_ms) {
  return state.last_fix && state.last_fix->valid && now_ms - state.last_fix->timestamp_ms <= stale_ms;
}

std::pair<std::string, char> to_nmea_coordinate(double degrees, bool is_latitude) {
  constexpr std::int64_t kScale = 100000;  // minute decimals
  const char hemi = is_latitude ? (degrees < 0 ? 'S' : 'N') : (degrees < 0 ? 'W' : 'E');
  const auto total = static_cast<std::int64_t>(std::llround(std::fabs(degrees) * 60.0 * kScale));
  const auto whole = total / (60 * kScale);
  const auto minutes_scaled = total % (60 * kScale);
  return {fmt::format("{:0{}d}{:02d}.{:05d}", whole, is_latitude ? 2 : 3, minutes_scaled / kScale,
                      minutes_scaled % kScale),
          hemi};
}

std::string frame_sentence(std::string_view payload) {
  return fmt::format("${}*{:02X}", payload, xor_checksum(payload));
}

}  // namespace smartcar::nmea
