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

#include "smartcar/simulator.hpp"

#include <fmt/format.h>

#include "smartcar/modem_session.hpp"
#include "smartcar/nmea.hpp"
#include "smartcar/sms_command.hpp"
#include "smartcar/virtual_gps.hpp"
#include "smartcar/virtual_modem.hpp"

namespace smartcar::sim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Current levels of every virtual sensor line.
struct SensorBoard {
  int impact_pulse = 0;
  int panic = 0;
  int alcohol = 0;
  int rain_wet = 0;
  int rain_intensity = 0;
  double temp_c = 22.0;
  double humidity_pct = 40.0;

  SensorFrame sample(SimMillis now_ms) const {
    return {now_ms, impact_pulse, panic, alcohol, rain_wet, rain_intensity, temp_c, humidity_pct};
  }
};

class Executor {
public:
  Executor(const Config& config, SimMillis until_ms) : config_(config), transport_(modem_, clock_), session_(transport_, clock_) {
    report_.until_ms = until_ms;
  }

  SimReport run(const std::vector<ScenarioEvent>& scenario) {
    std::size_t next = 0;
    while (clock_.now_ms() <= report_.until_ms) {
      const auto now = clock_.now_ms();
      for (; next < scenario.size() && scenario[next].t_ms <= now; ++next) apply(scenario[next], now);

      for (auto& line : gps_.emit(now)) {
        const auto cause = raw_gps_causes_.empty() ? now : pop_front(raw_gps_causes_);
        const auto sentence = nmea::parse_sentence(line);
        ++report_.counters.sentences_parsed;
        if (!sentence.checksum_ok) ++report_.counters.checksum_failures;
        if (sentence.kind == nmea::SentenceKind::Unsupported) ++report_.counters.unsupported_sentences;
        feed(sentence, cause);
      }

      feed(board_.sample(clock_.now_ms()), clock_.now_ms());
      ++report_.counters.frames;
      board_.impact_pulse = 0;

      for (const auto& ev : session_.poll()) {
        if (const auto* arrived = std::get_if<at::event::SmsArrived>(&ev)) {
          fetch(arrived->index);
        } else if (const auto* msg = std::get_if<at::event::InboundSms>(&ev)) {
          ++report_.counters.inbound_sms;
          feed(*msg, clock_.now_ms());
        }
      }

      // Sends may have moved the clock past this tick; resume on the grid.
      const auto tick = config_.tick_ms;
      const auto after = std::max(now + tick, clock_.now_ms());
      clock_.set((after + tick - 1) / tick * tick);
    }
    finish();
    return std::move(report_);
  }

private:
  static SimMillis pop_front(std::vector<SimMillis>& v) {
    const auto t = v.front();
    v.erase(v.begin());
    return t;
  }

  void apply(const ScenarioEvent& e, SimMillis now) {
    std::visit(overloaded{
                   [&](const ev::Impact& x) { board_.impact_pulse = x.level; },
                   [&](const ev::Panic& x) { board_.panic = x.level; },
                   [&](const ev::Alcohol& x) { board_.alcohol = x.counts; },
                   [&](const ev::Rain& x) {
                     board_.rain_wet = x.wet;
                     board_.rain_intensity = x.intensity;
                   },
                   [&](const ev::Cabin& x) {
                     board_.temp_c = x.temp_c;
                     board_.humidity_pct = x.humidity_pct;
                   },
                   [&](const ev::GpsLine& x) {
                     gps_.queue_raw(x.text);
                     raw_gps_causes_.push_back(e.t_ms);
                   },
                   [&](const ev::GpsFix& x) { gps_.schedule_fix({e.t_ms, x.latitude, x.longitude}); },
                   [&](const ev::SmsIn& x) { modem_.inject_sms(x.sender, x.body, now); },
                   [&](const ev::ModemErrorOnce&) { modem_.fail_next_commands(1); },
                   [&](const ev::ModemSilentFor& x) { modem_.go_silent_until(now + x.duration_ms); },
               },
               e.event);
  }

  void fetch(int index) {
    const auto outcome = session_.fetch_inbound(index, config_);
    if (!outcome.message) {
      ++report_.counters.fetch_failures;
      record(clock_.now_ms(), fmt::format("FETCH_FAILED index={} reason={}", index, outcome.failure_reason));
      return;
    }
    ++report_.counters.inbound_sms;
    feed(*outcome.message, clock_.now_ms());
  }

  void feed(const control::Input& input, SimMillis cause_ms) {
    const auto now = clock_.now_ms();
    auto result = control::step(std::move(state_), input, config_, now);
    state_ = std::move(result.state);
    check_state(now);
    for (const auto& action : result.actions) interpret(action, cause_ms);
  }

  void interpret(const control::Action& action, SimMillis cause_ms) {
    record(cause_ms, control::describe(action));
    ++dispatched_;
    if (const auto* alert = std::get_if<control::action::SendAlert>(&action)) {
      deliver(alert->message.destination, alert->message.body,
              fmt::format("ALERT_{}", to_string(alert->message.kind)), cause_ms);
    } else if (const auto* reply = std::get_if<control::action::SendReply>(&action)) {
      deliver(reply->destination, reply->text, "REPLY", cause_ms);
    } else {
      --dispatched_;
    }
  }

  void deliver(const std::string& destination, const std::string& body, std::string origin, SimMillis cause_ms) {
    OutboundSms sms;
    sms.t_ms = clock_.now_ms();
    sms.destination = destination;
    sms.body = body;
    sms.origin = std::move(origin);
    if (body.size() > kSmsMaxChars) violation(fmt::format("t={} body over 160 characters", sms.t_ms));
    record(cause_ms, fmt::format("SMS_BEGIN dest={}", destination));
    at::SendOutcome outcome;
    try {
      outcome = session_.send_sms(destination, body, config_);
    } catch (const std::exception& e) {
      outcome = {false, 1, fmt::format("rejected: {}", e.what())};
    }
    sms.delivered = outcome.delivered;
    sms.attempts = outcome.attempts;
    sms.failure_reason = outcome.failure_reason;
    report_.counters.sms_retries += outcome.attempts - 1;
    if (outcome.attempts > config_.sms_retry_max + 1) {
      violation(fmt::format("t={} {} attempts exceeds retry bound", sms.t_ms, outcome.attempts));
    }
    if (outcome.delivered) {
      record(cause_ms, fmt::format("SMS_DELIVERED dest={} attempts={}", destination, outcome.attempts));
    } else {
      record(cause_ms, fmt::format("DELIVERY_FAILED dest={} attempts={} reason={}", destination, outcome.attempts,
                                   outcome.failure_reason));
    }
    report_.outbound_sms.push_back(std::move(sms));
  }

  void record(SimMillis cause_ms, std::string text) {
    const auto now = clock_.now_ms();
    if (now < cause_ms) violation(fmt::format("t={} action precedes its cause at {}", now, cause_ms));
    report_.actions.push_back({now, cause_ms, std::move(text)});
  }

  void violation(std::string text) { report_.violations.push_back(std::move(text)); }

  void check_state(SimMillis now) {
    if (state_.alcohol_ema && *state_.alcohol_ema >= config_.alcohol_threshold && state_.engine_enabled) {
      violation(fmt::format("t={} engine enabled with alcohol_ema {:.3f}", now, *state_.alcohol_ema));
    }
    if (state_.wiper.mode == control::WiperMode::Off && state_.wiper.servo_angle_deg != 0.0) {
      violation(fmt::format("t={} wiper off with nonzero servo angle", now));
    }
  }

  void finish() {
    report_.end_ms = clock_.now_ms();
    report_.final_state = state_;
    if (dispatched_ != report_.outbound_sms.size()) {
      violation(fmt::format("{} messages dispatched but {} send records", dispatched_, report_.outbound_sms.size()));
    }
    std::size_t delivered = 0;
    for (const auto& sms : report_.outbound_sms) delivered += sms.delivered;
    if (delivered != modem_.sent().size()) {
      violation(fmt::format("{} deliveries reported but modem recorded {}", delivered, modem_.sent().size()));
    }
  }

  const Config& config_;
  SimClock clock_;
  VirtualModem modem_;
  VirtualModemTransport transport_;
  at::ModemSession session_;
  VirtualGps gps_;
  std::vector<SimMillis> raw_gps_causes_;
  SensorBoard board_;
  control::ControllerState state_;
  std::size_t dispatched_ = 0;
  SimReport report_;
};

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '\\') {
      out += "\\\\";
    } else if (u < 0x20 || u >= 0x7F) {
      out += fmt::format("\\x{:02x}", u);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

SimReport run(const std::vector<ScenarioEvent>& scenario, const Config& config, SimMillis until_ms) {
  validate(config);
  return Executor(config, until_ms).run(scenario);
}

std::string serialize(const SimReport& r) {
  std::string out = "# smartcar-sim report v1\n";
  out += fmt::format("run until_ms={} end_ms={}\n", r.until_ms, r.end_ms);
  for (const auto& a : r.actions) out += fmt::format("action t={} cause={} {}\n", a.t_ms, a.cause_ms, escape(a.text));
  for (const auto& s : r.outbound_sms) {
    out += fmt::format("sms t={} dest={} origin={} status={} attempts={}", s.t_ms, s.destination,
                       s.origin, s.delivered ? "delivered" : "failed", s.attempts);
    if (!s.delivered) out += fmt::format(" reason={}", s.failure_reason);
    out += fmt::format(" body={}\n", escape(s.body));
  }
  const auto& st = r.final_state;
  out += fmt::format("final engine={} wiper={} angle={:.1f} alcohol_ema={}", st.engine_enabled ? "ENABLED" : "DISABLED",
                     control::to_string(st.wiper.mode), st.wiper.servo_angle_deg,
                     st.alcohol_ema ? fmt::format("{:.3f}", *st.alcohol_ema) : std::string("none"));
  out += fmt::format(" fix={}\n", st.gps.last_fix ? fmt::format("{}@{}", sms::format_coordinates(*st.gps.last_fix),
                                                                 st.gps.last_fix->timestamp_ms)
                                                  : std::string("none"));
  const auto& c = r.counters;
  out += fmt::format(
      "counters frames={} sentences={} checksum_failures={} unsupported={} retries={} inbound={} fetch_failures={}\n",
      c.frames, c.sentences_parsed, c.checksum_failures, c.unsupported_sentences, c.sms_retries, c.inbound_sms,
      c.fetch_failures);
  out += fmt::format("violations {}\n", r.violations.size());
  for (const auto& v : r.violations) out += fmt::format("violation {}\n", escape(v));
  return out;
}

}  // namespace smartcar::sim
