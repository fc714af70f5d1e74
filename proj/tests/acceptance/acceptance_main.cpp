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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "smartcar/at_protocol.hpp"
#include "smartcar/controller.hpp"
#include "smartcar/modem_session.hpp"
#include "smartcar/nmea.hpp"
#include "smartcar/scenario.hpp"
#include "smartcar/simulator.hpp"
#include "smartcar/virtual_gps.hpp"
#include "smartcar/virtual_modem.hpp"
#include "test_support.hpp"

using namespace smartcar;

namespace {

// Pinned tolerances and sizes.
constexpr double kScenarioRuntimeLimitS = 1.0;
constexpr double kRoundTripRuntimeLimitS = 5.0;
constexpr double kCoordinateTolDeg = 1e-6;
constexpr int kFuzzLines = 1'000'000;
constexpr std::size_t kFuzzMaxBytes = 64;
constexpr int kRoundTripPairs = 10'000;
constexpr int kDebounceStreams = 100'000;
constexpr int kChunkingTrials = 1'000;

constexpr const char* kRmc = "$GPRMC,123519,A,4807.038,N,01131.000,E,022.4,084.4,230394,003.1,W*6A";
constexpr const char* kCoords = "48.117300,11.516667";
constexpr const char* kMapsUrl = "https://maps.google.com/?q=48.117300,11.516667";

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool contains(std::string_view s, std::string_view part) { return s.find(part) != std::string_view::npos; }

std::size_t index_of(const sim::SimReport& r, std::string_view prefix) {
  for (std::size_t i = 0; i < r.actions.size(); ++i) {
    if (r.actions[i].text.rfind(prefix, 0) == 0) return i;
  }
  return r.actions.size();
}

int count_actions(const sim::SimReport& r, std::string_view prefix) {
  return static_cast<int>(std::count_if(r.actions.begin(), r.actions.end(),
                                        [&](const auto& a) { return a.text.rfind(prefix, 0) == 0; }));
}

std::string impact_burst(SimMillis start, int samples) {
  std::string s;
  for (int i = 0; i < samples; ++i) s += fmt::format("t={} impact 1\n", start + i * 10);
  return s;
}

Outcome accident_end_to_end() {
  const auto start = std::chrono::steady_clock::now();
  const Config config;
  const auto scenario = sim::load_scenario(fmt::format("t=1000 gps {}\n", kRmc) + impact_burst(5000, 6));
  const auto report = sim::run(scenario, config, 5000 + config.gps_wait_ms + 1000);
  const double elapsed = seconds_since(start);
  const bool one = report.outbound_sms.size() == 1;
  const bool body = one && report.outbound_sms[0].destination == config.alert_primary_number &&
                    contains(report.outbound_sms[0].body, kCoords) && contains(report.outbound_sms[0].body, kMapsUrl);
  const auto airbag = index_of(report, "AIRBAG_LINE");
  const auto begin = index_of(report, "SMS_BEGIN");
  const bool order = airbag < begin && begin < report.actions.size();
  return {one && body && order && report.violations.empty() && elapsed < kScenarioRuntimeLimitS,
          fmt::format("sms={} body_ok={} airbag_before_send={} violations={} runtime={:.3f}s (limit {}s)",
                      report.outbound_sms.size(), body, order, report.violations.size(), elapsed,
                      kScenarioRuntimeLimitS)};
}

Outcome panic_semantics() {
  const auto start = std::chrono::steady_clock::now();
  const Config config;
  const std::string presses =
      "t=1000 panic 1\nt=1200 panic 0\n"
      "t=6000 panic 1\nt=6200 panic 0\n";
  const auto early = sim::run(sim::load_scenario(presses), config, 20'000);
  const auto late = sim::run(sim::load_scenario(presses + "t=32000 panic 1\nt=32200 panic 0\n"), config, 40'000);
  const double elapsed = seconds_since(start);
  const auto panics = [](const sim::SimReport& r) {
    return std::count_if(r.outbound_sms.begin(), r.outbound_sms.end(),
                         [](const auto& s) { return s.origin == "ALERT_PANIC" && s.delivered; });
  };
  const auto first = panics(early), second = panics(late);
  return {first == 1 && second == 2 && early.outbound_sms.size() == 1 && late.outbound_sms.size() == 2 &&
              elapsed < kScenarioRuntimeLimitS,
          fmt::format("presses at 1s,6s -> {} sms; plus 32s -> {} sms; runtime={:.3f}s (limit {}s)", first, second,
                      elapsed, kScenarioRuntimeLimitS)};
}

Outcome remote_query() {
  const auto report = sim::run(sim::load_scenario("t=0 cabin 24.5 51\nt=1000 sms +15550123 STATUS\n"), {}, 5000);
  const bool one = report.outbound_sms.size() == 1;
  const auto body = one ? report.outbound_sms[0].body : std::string();
  const bool ok = one && report.outbound_sms[0].destination == "+15550123" && report.outbound_sms[0].delivered &&
                  contains(body, "TEMP=24.5C") && contains(body, "HUM=51%");
  return {ok && report.violations.empty(), fmt::format("replies={} body=\"{}\"", report.outbound_sms.size(), body)};
}

Outcome alcohol_interlock() {
  const Config config;
  std::string s;
  SimMillis t = 1000;
  for (int v = 0; v <= 600; v += 10, t += 100) s += fmt::format("t={} alcohol {}\n", t, v);
  for (int v = 590; v >= 0; v -= 10, t += 100) s += fmt::format("t={} alcohol {}\n", t, v);
  const auto report = sim::run(sim::load_scenario(s), config, t + 5000);

  // Independent per-tick replay of the same board levels through step().
  const auto events = sim::load_scenario(s);
  control::ControllerState state;
  std::size_t next = 0;
  int level = 0, ticks_checked = 0, broken = 0;
  for (SimMillis now = 0; now <= t + 5000; now += config.tick_ms) {
    for (; next < events.size() && events[next].t_ms <= now; ++next) {
      level = std::get<sim::ev::Alcohol>(events[next].event).counts;
    }
    SensorFrame frame{now, 0, 0, level, 0, 0, 22.0, 40.0};
    state = control::step(std::move(state), frame, config, now).state;
    ++ticks_checked;
    if (*state.alcohol_ema >= config.alcohol_threshold && state.engine_enabled) ++broken;
  }

  const int off = count_actions(report, "SET_ENGINE disabled");
  const int on = count_actions(report, "SET_ENGINE enabled");
  const auto alerts = std::count_if(report.outbound_sms.begin(), report.outbound_sms.end(), [&](const auto& m) {
    return m.origin == "ALERT_ALCOHOL" && m.destination == config.alert_safety_number && m.delivered;
  });
  return {off == 1 && on == 1 && alerts == 1 && report.outbound_sms.size() == 1 && broken == 0 &&
              report.violations.empty(),
          fmt::format("disable={} enable={} alcohol_sms_to_safety={} ticks_checked={} invariant_breaks={} "
                      "harness_violations={}",
                      off, on, alerts, ticks_checked, broken, report.violations.size())};
}

Outcome parser_robustness() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> byte(0, 255), printable(0x20, 0x7E), mode(0, 3);
  std::uniform_int_distribution<std::size_t> len(0, kFuzzMaxBytes);
  int throws = 0, accepted = 0, disagreements = 0;
  const std::vector<std::string> seeds = {kRmc, sim::render_gga(48.1173, 11.516667, 0), sim::render_void_rmc(0)};
  for (int i = 0; i < kFuzzLines; ++i) {
    std::string line;
    switch (mode(rng)) {
      case 0: {  // raw bytes
        const auto n = len(rng);
        for (std::size_t k = 0; k < n; ++k) line.push_back(static_cast<char>(byte(rng)));
        break;
      }
      case 1: {  // '$' + printable + correct checksum
        const auto n = len(rng) % (kFuzzMaxBytes - 4);
        std::string payload;
        for (std::size_t k = 0; k < n; ++k) {
          char c = static_cast<char>(printable(rng));
          payload.push_back(c == '*' || c == '$' ? ',' : c);
        }
        unsigned x = 0;
        for (char c : payload) x ^= static_cast<unsigned char>(c);
        line = fmt::format("${}*{:02X}", payload, x);
        break;
      }
      default: {  // mutated real sentence, truncated to the byte budget
        line = seeds[rng() % seeds.size()];
        const int edits = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < edits; ++e) line[rng() % line.size()] = static_cast<char>(printable(rng));
        line.resize(std::min(line.size(), kFuzzMaxBytes));
        break;
      }
    }
    try {
      const auto s = nmea::parse_sentence(line);
      if (s.checksum_ok) {
        ++accepted;
        if (!testing::xor_fold_oracle(line)) ++disagreements;
      }
    } catch (...) {
      ++throws;
    }
  }
  return {throws == 0 && disagreements == 0 && accepted > 0,
          fmt::format("lines={} failures={} accepted={} oracle_rejections={}", kFuzzLines, throws, accepted,
                      disagreements)};
}

Outcome coordinate_round_trip() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> lat(-90.0, 90.0), lon(-180.0, 180.0);
  double worst = 0.0;
  int rejected = 0;
  for (int i = 0; i < kRoundTripPairs; ++i) {
    const double la = lat(rng), lo = lon(rng);
    sim::VirtualGps gps;
    gps.schedule_fix({0, la, lo});
    for (const auto& line : gps.emit(0)) {
      const auto update = nmea::update_fix({}, nmea::parse_sentence(line), 0);
      if (update.outcome != nmea::FixOutcome::Accepted) {
        ++rejected;
        continue;
      }
      worst = std::max({worst, std::abs(update.state.last_fix->latitude - la),
                        std::abs(update.state.last_fix->longitude - lo)});
    }
  }
  const double elapsed = seconds_since(start);
  return {rejected == 0 && worst <= kCoordinateTolDeg && elapsed < kRoundTripRuntimeLimitS,
          fmt::format("pairs={} max_error={:.3e} deg (tol {:.0e}) rejected={} runtime={:.3f}s (limit {}s)",
                      kRoundTripPairs, worst, kCoordinateTolDeg, rejected, elapsed, kRoundTripRuntimeLimitS)};
}

Outcome debounce_oracle() {
  std::mt19937_64 rng(3);
  const Config config;
  long long decisions = 0, mismatches = 0, triggers = 0;
  for (int stream = 0; stream < kDebounceStreams; ++stream) {
    testing::DebounceOracle oracle{config.impact_window_ms, config.impact_min_high, config.impact_refractory_ms, {}, 0};
    control::ImpactDebouncer d;
    std::bernoulli_distribution high(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    SimMillis t = 0;
    const int n = 20 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i, t += config.tick_ms) {
      const int sample = high(rng);
      const bool expected = oracle.decide(t, sample);
      const bool got = control::debounce_impact(d, sample, config, t) == control::ImpactDecision::Triggered;
      ++decisions;
      triggers += got;
      mismatches += got != expected;
    }
  }
  return {mismatches == 0,
          fmt::format("streams={} decisions={} triggers={} mismatches={}", kDebounceStreams, decisions, triggers,
                      mismatches)};
}

Outcome wiper_properties() {
  const Config config;
  int monotone_breaks = 0, bound_breaks = 0, continuity_breaks = 0;
  for (int wet : {0, 1}) {
    for (int i = 1; i <= kAdcMax; ++i) {
      monotone_breaks += control::wiper_mode(wet, i, config) < control::wiper_mode(wet, i - 1, config);
    }
  }
  for (auto m : {control::WiperMode::Off, control::WiperMode::Intermittent, control::WiperMode::Low,
                 control::WiperMode::High}) {
    const auto period = std::max<SimMillis>(control::cycle_period_ms(m), 1000);
    const auto sweep = control::sweep_period_ms(m);
    const double step_bound = sweep > 0 ? control::kServoMaxDeg * 10.0 / (static_cast<double>(sweep) / 2.0) : 0.0;
    for (SimMillis t = 0; t <= 2 * period; t += 10) {
      const double a = control::servo_angle(m, t);
      bound_breaks += a < 0.0 || a > control::kServoMaxDeg;
      continuity_breaks += std::abs(control::servo_angle(m, t + 10) - a) > step_bound + 1e-9;
    }
  }
  return {monotone_breaks == 0 && bound_breaks == 0 && continuity_breaks == 0,
          fmt::format("monotonicity_breaks={} bound_breaks={} continuity_breaks={}", monotone_breaks, bound_breaks,
                      continuity_breaks)};
}

Outcome modem_faults() {
  const Config config;
  sim::SimClock clock;
  sim::VirtualModem modem;
  sim::VirtualModemTransport transport(modem, clock);
  at::ModemSession session(transport, clock);
  modem.fail_next_commands(2);
  const auto retried = session.send_sms(config.alert_primary_number, "TEST", config);

  const auto scenario = sim::load_scenario(fmt::format("t=1000 gps {}\nt=4000 fault silent 100000\n", kRmc) +
                                           impact_burst(5000, 6));
  const auto report = sim::run(scenario, config, 60'000);
  const bool failed = report.outbound_sms.size() == 1 && !report.outbound_sms[0].delivered;
  const int attempts = failed ? report.outbound_sms[0].attempts : -1;
  const bool record = index_of(report, "DELIVERY_FAILED") < report.actions.size();
  return {retried.delivered && retried.attempts == 3 && failed && attempts == config.sms_retry_max + 1 && record,
          fmt::format("error_twice: delivered={} attempts={}; silent: delivered={} attempts={} (expected {}) "
                      "delivery_failed_record={}",
                      retried.delivered, retried.attempts, !failed, attempts, config.sms_retry_max + 1, record)};
}

std::string modem_response_stream() {
  sim::VirtualModem modem;
  std::string out;
  SimMillis t = 0;
  const auto send = [&](const at::ModemCommand& c) { out += modem.exchange(at::encode_command(c), t += 10); };
  send(at::cmd::Attention{});
  send(at::cmd::SetTextMode{});
  modem.inject_sms("+15550123", "STATUS", t);
  send(at::cmd::SendSmsHeader{"+15550100"});
  send(at::cmd::SmsBody{"ACCIDENT DETECTED. Location: 48.117300,11.516667"});
  send(at::cmd::ReadSms{1});
  modem.inject_sms("+15550124", "OK", t);
  modem.inject_sms("+15550125", "> not a prompt", t);
  send(at::cmd::ReadSms{2});
  send(at::cmd::ReadSms{3});
  send(at::cmd::ReadSms{9});
  out += modem.exchange("GARBAGE\r", t += 10);
  return out;
}

Outcome determinism() {
  int scenarios = 0, differing = 0;
  std::vector<std::string> sources = {fmt::format("t=1000 gps {}\n", kRmc) + impact_burst(5000, 6)};
  for (const auto& entry : std::filesystem::directory_iterator(SMARTCAR_SCENARIO_DIR)) {
    if (entry.path().extension() == ".scn") sources.push_back(testing::read_text(entry.path().string()));
  }
  for (const auto& src : sources) {
    const auto scenario = sim::load_scenario(src);
    const auto until = (scenario.empty() ? 0 : scenario.back().t_ms) + 20'000;
    ++scenarios;
    differing += sim::serialize(sim::run(scenario, {}, until)) != sim::serialize(sim::run(scenario, {}, until));
  }

  const auto stream = modem_response_stream();
  const auto whole = at::decode_stream(stream);
  std::mt19937_64 rng(4);
  int chunk_mismatches = 0;
  for (int trial = 0; trial < kChunkingTrials; ++trial) {
    at::StreamDecoder decoder;
    std::vector<at::AtEvent> events;
    for (const auto& chunk : testing::random_partition(stream, rng)) {
      for (auto& e : decoder.feed(chunk)) events.push_back(std::move(e));
    }
    chunk_mismatches += events != whole.events || decoder.pending() != whole.remainder;
  }
  return {differing == 0 && scenarios > 1 && chunk_mismatches == 0 && whole.events.size() > 10,
          fmt::format("scenarios={} differing_reruns={}; stream_bytes={} events={} chunking_trials={} mismatches={}",
                      scenarios, differing, stream.size(), whole.events.size(), kChunkingTrials, chunk_mismatches)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"accident end-to-end", accident_end_to_end},
      {"panic semantics", panic_semantics},
      {"remote query loop", remote_query},
      {"alcohol interlock", alcohol_interlock},
      {"parser robustness", parser_robustness},
      {"coordinate round-trip", coordinate_round_trip},
      {"debounce oracle", debounce_oracle},
      {"wiper properties", wiper_properties},
      {"modem fault handling", modem_faults},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, fmt::format("exception: {}", e.what())};
    }
    failures += !outcome.pass;
    fmt::print("{} [{:2}] {}: {}\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, outcome.detail);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
