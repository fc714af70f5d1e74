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
#include <vector>

#include "smartcar/types.hpp"

namespace smartcar::sim {

struct ScheduledFix {
  SimMillis t_ms = 0;
  double latitude = 0.0;
  double longitude = 0.0;
};

/// GGA with quality 1 and 8 satellites, checksummed.
std::string render_gga(double latitude, double longitude, SimMillis t_ms);
/// RMC with status 'A', checksummed.
std::string render_rmc(double latitude, double longitude, SimMillis t_ms);
/// RMC with status 'V' and empty position fields.
std::string render_void_rmc(SimMillis t_ms);

/// NEO-6M stand-in emitting at 1 Hz. Each emission is GGA + RMC for the
/// latest scheduled fix, or a void RMC before the first fix is due. Raw lines
/// queued by the scenario are forwarded verbatim ahead of generated ones.
class VirtualGps {
public:
  static constexpr SimMillis kCadenceMs = 1000;

  void schedule_fix(const ScheduledFix& fix);
  void queue_raw(std::string line) { raw_.push_back(std::move(line)); }

  /// Lines due at `now_ms`; call once per tick with non-decreasing time.
  std::vector<std::string> emit(SimMillis now_ms);

private:
  std::vector<ScheduledFix> schedule_;  // sorted by t_ms
  std::vector<std::string> raw_;
  SimMillis next_emit_ms_ = 0;
};

}  // namespace smartcar::sim
