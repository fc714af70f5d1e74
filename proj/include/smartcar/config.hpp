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

#include "smartcar/types.hpp"

namespace smartcar {

/// Controller tuning. Thresholds are raw ADC counts, durations are simulation ms.
struct Config {
  std::string alert_primary_number = "+15550100";
  std::string alert_safety_number = "+15550101";
  int alcohol_threshold = 450;
  int alcohol_release = 400;
  bool alcohol_cutoff_while_running = false;
  SimMillis impact_window_ms = 100;
  int impact_min_high = 5;
  SimMillis impact_refractory_ms = 60000;
  SimMillis panic_refractory_ms = 30000;
  SimMillis gps_stale_ms = 5000;
  SimMillis gps_wait_ms = 10000;
  int sms_retry_max = 3;
  SimMillis sms_retry_backoff_ms = 2000;
  SimMillis sms_ok_timeout_ms = 5000;
  int wiper_intermittent_max = 300;
  int wiper_low_max = 700;
  SimMillis tick_ms = 10;

  bool operator==(const Config&) const = default;
};

/// Parses `key = value` lines. `#` starts a comment, CRLF is accepted and
/// unknown keys are ignored. Missing keys keep their defaults.
///
/// Throws ParseError (with line number) for a line without `=` or a bad
/// value, and ValidationError when the result breaks an invariant.
Config load_config(std::string_view source);

/// Throws ValidationError naming the offending key (or key pair).
void validate(const Config& config);

/// Renders every key in a stable order; load_config(serialize_config(c)) == c.
std::string serialize_config(const Config& config);

}  // namespace smartcar
