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

#include "smartcar/types.hpp"

namespace smartcar {

namespace {

bool is_level(int v) { return v == 0 || v == 1; }
bool is_adc(int v) { return v >= 0 && v <= kAdcMax; }

}  // namespace

void validate(const SensorFrame& frame) {
  if (!is_level(frame.impact) || !is_level(frame.panic) || !is_level(frame.rain_wet)) {
    throw ValidationError("sensor frame: digital channel must be 0 or 1");
  }
  if (!is_adc(frame.alcohol_raw) || !is_adc(frame.rain_intensity)) {
    throw ValidationError("sensor frame: ADC channel outside 0..1023");
  }
  if (!(frame.humidity_pct >= 0.0 && frame.humidity_pct <= 100.0)) {
    throw ValidationError("sensor frame: humidity outside 0..100");
  }
}

std::string_view to_string(AlertKind kind) {
  switch (kind) {
    case AlertKind::Accident: return "ACCIDENT";
    case AlertKind::Panic: return "PANIC";
    case AlertKind::Alcohol: return "ALCOHOL";
  }
  return "?";
}

}  // namespace smartcar
