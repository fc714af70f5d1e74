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

#include "smartcar/controller.hpp"

#include <fmt/format.h>

#include "smartcar/sms_command.hpp"

namespace smartcar::control {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void append(std::vector<Action>& out, std::vector<Action>&& more) {
  for (auto& a : more) out.push_back(std::move(a));
}

std::vector<Action> update_gps(ControllerState& state, const nmea::Sentence& sentence, SimMillis now_ms) {
  auto update = nmea::update_fix(state.gps, sentence, now_ms);
  state.gps = std::move(update.state);
  switch (update.outcome) {
    case nmea::FixOutcome::BadChecksum:
      return {action::Log{"gps: checksum mismatch, sentence dropped"}};
    case nmea::FixOutcome::BadCoordinates:
      return {action::Log{"gps: undecodable coordinates, sentence dropped"}};
    default:
      return {};
  }
}

std::vector<Action> evaluate_panic(ControllerState& state, int level, const Config& config, SimMillis now_ms) {
  const bool rising = level == 1 && state.last_panic_level == 0;
  state.last_panic_level = level;
  if (!rising || now_ms < state.panic_latch_until_ms) return {};
  state.panic_latch_until_ms = now_ms + config.panic_refractory_ms;
  return {action::SendAlert{sms::format_alert(AlertKind::Panic, state.gps, config, now_ms)}};
}

std::vector<Action> evaluate_wiper(ControllerState& state, const SensorFrame& frame, const Config& config,
                                   SimMillis now_ms) {
  const auto mode = wiper_mode(frame.rain_wet, frame.rain_intensity, config);
  std::vector<Action> out;
  if (mode != state.wiper.mode) {
    state.wiper_mode_since_ms = now_ms;
    state.wiper = {mode, 0.0};
    out.push_back(action::SetWiper{state.wiper});
  }
  state.wiper.servo_angle_deg = servo_angle(mode, now_ms - state.wiper_mode_since_ms);
  return out;
}

std::vector<Action> on_frame(ControllerState& state, const SensorFrame& frame, const Config& config,
                             SimMillis now_ms) {
  std::vector<Action> out;
  try {
    validate(frame);
  } catch (const ValidationError& e) {
    out.push_back(action::Log{fmt::format("sensor: {}", e.what())});
    append(out, resolve_pending_accident(state, config, now_ms));
    return out;
  }
  state.last_frame = frame;

  append(out, resolve_pending_accident(state, config, now_ms));
  if (debounce_impact(state.impact, frame.impact, config, now_ms) == ImpactDecision::Triggered) {
    append(out, on_accident(state, config, now_ms));
  }
  append(out, evaluate_panic(state, frame.panic, config, now_ms));
  append(out, evaluate_alcohol(state, frame.alcohol_raw, config, now_ms));
  append(out, evaluate_wiper(state, frame, config, now_ms));
  return out;
}

}  // namespace

std::string_view to_string(WiperMode mode) {
  switch (mode) {
    case WiperMode::Off: return "OFF";
    case WiperMode::Intermittent: return "INTERMITTENT";
    case WiperMode::Low: return "LOW";
    case WiperMode::High: return "HIGH";
  }
  return "?";
}

std::string describe(const Action& a) {
  return std::visit(
      overloaded{
          [](const action::AssertAirbagLine&) { return std::string("AIRBAG_LINE asserted"); },
          [](const action::SendAlert& s) {
            return fmt::format("SEND_ALERT kind={} dest={} body={}", to_string(s.message.kind), s.message.destination,
                               s.message.body);
          },
          [](const action::SendReply& s) { return fmt::format("SEND_REPLY dest={} body={}", s.destination, s.text); },
          [](const action::SetWiper& s) {
            return fmt::format("SET_WIPER mode={} angle={:.1f}", to_string(s.command.mode), s.command.servo_angle_deg);
          },
          [](const action::SetEngine& s) {
            if (s.enabled) return std::string("SET_ENGINE enabled");
            return fmt::format("SET_ENGINE disabled ({})", s.cutoff ? "cutoff" : "start inhibit");
          },
          [](const action::Log& s) { return fmt::format("LOG {}", s.text); },
      },
      a);
}

ImpactDecision debounce_impact(ImpactDebouncer& d, int sample, const Config& config, SimMillis now_ms) {
  d.history.push_back({now_ms, sample});
  while (!d.history.empty() && d.history.front().t_ms <= now_ms - config.impact_window_ms) d.history.pop_front();

  int highs = 0;
  for (const auto& s : d.history) highs += s.level != 0;
  if (highs < config.impact_min_high || now_ms < d.latch_until_ms) return ImpactDecision::Quiet;
  d.latch_until_ms = now_ms + config.impact_refractory_ms;
  return ImpactDecision::Triggered;
}

std::vector<Action> on_accident(ControllerState& state, const Config& config, SimMillis now_ms) {
  std::vector<Action> out;
  // A hold still open from an earlier trigger goes out before the new one.
  if (state.accident_waiting_since_ms) {
    out.push_back(action::SendAlert{sms::format_alert(AlertKind::Accident, state.gps, config, now_ms)});
    state.accident_waiting_since_ms.reset();
  }
  out.push_back(action::AssertAirbagLine{});
  if (nmea::has_fresh_fix(state.gps, now_ms, config.gps_stale_ms)) {
    out.push_back(action::SendAlert{sms::format_alert(AlertKind::Accident, state.gps, config, now_ms)});
  } else {
    state.accident_waiting_since_ms = now_ms;
    out.push_back(action::Log{"accident: waiting for GPS fix"});
  }
  return out;
}

std::vector<Action> resolve_pending_accident(ControllerState& state, const Config& config, SimMillis now_ms) {
  if (!state.accident_waiting_since_ms) return {};
  const bool fresh = nmea::has_fresh_fix(state.gps, now_ms, config.gps_stale_ms);
  if (!fresh && now_ms - *state.accident_waiting_since_ms < config.gps_wait_ms) return {};
  state.accident_waiting_since_ms.reset();
  return {action::SendAlert{sms::format_alert(AlertKind::Accident, state.gps, config, now_ms)}};
}

std::vector<Action> evaluate_alcohol(ControllerState& state, int raw, const Config& config, SimMillis now_ms) {
  const double ema = state.alcohol_ema ? kAlcoholAlpha * raw + (1.0 - kAlcoholAlpha) * *state.alcohol_ema
                                       : static_cast<double>(raw);
  state.alcohol_ema = ema;

  std::vector<Action> out;
  if (ema >= config.alcohol_threshold && state.engine_enabled) {
    state.engine_enabled = false;
    out.push_back(action::SetEngine{false, config.alcohol_cutoff_while_running});
    if (!state.alcohol_alert_sent_this_engagement) {
      state.alcohol_alert_sent_this_engagement = true;
      out.push_back(action::SendAlert{sms::format_alert(AlertKind::Alcohol, state.gps, config, now_ms)});
    }
  } else if (ema < config.alcohol_release && !state.engine_enabled) {
    state.engine_enabled = true;
    state.alcohol_alert_sent_this_engagement = false;
    out.push_back(action::SetEngine{true, config.alcohol_cutoff_while_running});
  }
  return out;
}

WiperMode wiper_mode(int rain_wet, int rain_intensity, const Config& config) {
  if (rain_wet == 0) return WiperMode::Off;
  if (rain_intensity <= config.wiper_intermittent_max) return WiperMode::Intermittent;
  if (rain_intensity <= config.wiper_low_max) return WiperMode::Low;
  return WiperMode::High;
}

SimMillis sweep_period_ms(WiperMode mode) {
  switch (mode) {
    case WiperMode::High: return 1000;
    case WiperMode::Low: return 2000;
    case WiperMode::Intermittent: return 2000;
    case WiperMode::Off: return 0;
  }
  return 0;
}

SimMillis cycle_period_ms(WiperMode mode) {
  return mode == WiperMode::Intermittent ? 4000 : sweep_period_ms(mode);
}

double servo_angle(WiperMode mode, SimMillis phase_ms) {
  if (mode == WiperMode::Off || phase_ms < 0) return 0.0;
  const auto sweep = sweep_period_ms(mode);
  const auto t = phase_ms % cycle_period_ms(mode);
  if (t >= sweep) return 0.0;  // intermittent rest
  const double half = static_cast<double>(sweep) / 2.0;
  const double x = static_cast<double>(t);
  return x < half ? kServoMaxDeg * x / half : kServoMaxDeg * (static_cast<double>(sweep) - x) / half;
}

StepResult step(ControllerState state, const Input& input, const Config& config, SimMillis now_ms) {
  std::vector<Action> actions;
  std::visit(overloaded{
                 [&](const nmea::Sentence& sentence) {
                   append(actions, update_gps(state, sentence, now_ms));
                   append(actions, resolve_pending_accident(state, config, now_ms));
                 },
                 [&](const SensorFrame& frame) { append(actions, on_frame(state, frame, config, now_ms)); },
                 [&](const at::event::InboundSms& sms_in) {
                   append(actions, resolve_pending_accident(state, config, now_ms));
                   auto frame = state.last_frame;
                   frame.t_ms = now_ms;
                   const auto query = sms::parse_query(sms_in.body);
                   actions.push_back(action::SendReply{
                       sms_in.sender, sms::format_reply(query, frame, state.gps, config, state.engine_enabled)});
                 },
             },
             input);
  return {std::move(state), std::move(actions)};
}

}  // namespace smartcar::control
