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

#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smartcar/at_protocol.hpp"
#include "smartcar/config.hpp"
#include "smartcar/nmea.hpp"
#include "smartcar/types.hpp"

namespace smartcar::control {

/// Ordered by wiping effort.
enum class WiperMode { Off = 0, Intermittent = 1, Low = 2, High = 3 };

std::string_view to_string(WiperMode mode);

struct WiperCommand {
  WiperMode mode = WiperMode::Off;
  double servo_angle_deg = 0.0;

  bool operator==(const WiperCommand&) const = default;
};

inline constexpr double kServoMaxDeg = 170.0;

namespace action {
struct AssertAirbagLine {
  bool operator==(const AssertAirbagLine&) const = default;
};
struct SendAlert {
  AlertMessage message;
  bool operator==(const SendAlert&) const = default;
};
struct SendReply {
  std::string destination;
  std::string text;
  bool operator==(const SendReply&) const = default;
};
struct SetWiper {
  WiperCommand command;
  bool operator==(const SetWiper&) const = default;
};
struct SetEngine {
  bool enabled = true;
  /// False: start inhibit only. True: also cuts a running engine.
  bool cutoff = false;
  bool operator==(const SetEngine&) const = default;
};
struct Log {
  std::string text;
  bool operator==(const Log&) const = default;
};
}  // namespace action

using Action = std::variant<action::AssertAirbagLine, action::SendAlert, action::SendReply, action::SetWiper,
                            action::SetEngine, action::Log>;

/// One-line stable rendering, used in reports and transcripts.
std::string describe(const Action& action);

struct ImpactSample {
  SimMillis t_ms = 0;
  int level = 0;
  bool operator==(const ImpactSample&) const = default;
};

/// Count-in-window debounce for the bouncy SW420 output.
struct ImpactDebouncer {
  std::deque<ImpactSample> history;  // samples inside the trailing window
  SimMillis latch_until_ms = 0;

  bool operator==(const ImpactDebouncer&) const = default;
};

enum class ImpactDecision { Quiet, Triggered };

struct ControllerState {
  nmea::GpsState gps;
  ImpactDebouncer impact;
  std::optional<SimMillis> accident_waiting_since_ms;  // alert held back for a GPS fix
  SimMillis panic_latch_until_ms = 0;
  int last_panic_level = 0;
  std::optional<double> alcohol_ema;
  bool engine_enabled = true;
  bool alcohol_alert_sent_this_engagement = false;
  WiperCommand wiper;
  SimMillis wiper_mode_since_ms = 0;
  SensorFrame last_frame;

  bool operator==(const ControllerState&) const = default;
};

using Input = std::variant<SensorFrame, nmea::Sentence, at::event::InboundSms>;

struct StepResult {
  ControllerState state;
  std::vector<Action> actions;
};

/// Pure transition. Actions are emitted in stage order: gps update, impact,
/// panic, alcohol, wiper, sms. `now_ms` must not decrease between calls.
StepResult step(ControllerState state, const Input& input, const Config& config, SimMillis now_ms);

/// Records the sample; Triggered iff at least `impact_min_high` high samples
/// fall in (now - impact_window_ms, now] and the refractory latch has expired.
ImpactDecision debounce_impact(ImpactDebouncer& debouncer, int sample, const Config& config, SimMillis now_ms);

/// Airbag line first, then the accident alert (or a hold for a fresh fix).
std::vector<Action> on_accident(ControllerState& state, const Config& config, SimMillis now_ms);

/// Releases a held accident alert once a fresh fix exists or gps_wait_ms ran out.
std::vector<Action> resolve_pending_accident(ControllerState& state, const Config& config, SimMillis now_ms);

/// EMA (alpha 0.2) plus threshold/release hysteresis driving the interlock.
std::vector<Action> evaluate_alcohol(ControllerState& state, int raw, const Config& config, SimMillis now_ms);

inline constexpr double kAlcoholAlpha = 0.2;

WiperMode wiper_mode(int rain_wet, int rain_intensity, const Config& config);

/// Duration of one 0 -> 170 -> 0 sweep; 0 for Off.
SimMillis sweep_period_ms(WiperMode mode);

/// Full cycle length including the intermittent rest; 0 for Off.
SimMillis cycle_period_ms(WiperMode mode);

/// Servo position `phase_ms` after the mode was entered.
double servo_angle(WiperMode mode, SimMillis phase_ms);

}  // namespace smartcar::control
