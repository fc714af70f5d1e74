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

#include "smartcar/virtual_gps.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "smartcar/nmea.hpp"

namespace smartcar::sim {

namespace {

constexpr std::string_view kDate = "010126";

std::string utc_time(SimMillis t_ms) {
  const auto secs = t_ms / 1000;
  return fmt::format("{:02d}{:02d}{:02d}.{:02d}", (secs / 3600) % 24, (secs / 60) % 60, secs % 60, (t_ms % 1000) / 10);
}

}  // namespace

std::string render_gga(double latitude, double longitude, SimMillis t_ms) {
  const auto [lat, ns] = nmea::to_nmea_coordinate(latitude, true);
  const auto [lon, ew] = nmea::to_nmea_coordinate(longitude, false);
  return nmea::frame_sentence(
      fmt::format("GPGGA,{},{},{},{},{},1,08,0.9,545.4,M,46.9,M,,", utc_time(t_ms), lat, ns, lon, ew));
}

std::string render_rmc(double latitude, double longitude, SimMillis t_ms) {
  const auto [lat, ns] = nmea::to_nmea_coordinate(latitude, true);
  const auto [lon, ew] = nmea::to_nmea_coordinate(longitude, false);
  return nmea::frame_sentence(
      fmt::format("GPRMC,{},A,{},{},{},{},0.0,0.0,{},,,A", utc_time(t_ms), lat, ns, lon, ew, kDate));
}

std::string render_void_rmc(SimMillis t_ms) {
  return nmea::frame_sentence(fmt::format("GPRMC,{},V,,,,,,,{},,,N", utc_time(t_ms), kDate));
}

void VirtualGps::schedule_fix(const ScheduledFix& fix) {
  const auto pos = std::upper_bound(schedule_.begin(), schedule_.end(), fix.t_ms,
                                    [](SimMillis t, const ScheduledFix& f) { return t < f.t_ms; });
  schedule_.insert(pos, fix);
}

std::vector<std::string> VirtualGps::emit(SimMillis now_ms) {
  std::vector<std::string> out = std::exchange(raw_, {});
  if (now_ms < next_emit_ms_) return out;
  next_emit_ms_ = (now_ms / kCadenceMs + 1) * kCadenceMs;

  const auto due = std::upper_bound(schedule_.begin(), schedule_.end(), now_ms,
                                    [](SimMillis t, const ScheduledFix& f) { return t < f.t_ms; });
  if (due == schedule_.begin()) {
    out.push_back(render_void_rmc(now_ms));
  } else {
    const auto& fix = *std::prev(due);
    out.push_back(render_gga(fix.latitude, fix.longitude, now_ms));
    out.push_back(render_rmc(fix.latitude, fix.longitude, now_ms));
  }
  return out;
}

}  // namespace smartcar::sim
