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

#include "smartcar/scenario.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "text_util.hpp"

namespace smartcar::sim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Pops the next space-separated token off the front of `rest`.
std::string_view next_token(std::string_view& rest) {
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  auto end = rest.find_first_of(" \t");
  if (end == std::string_view::npos) end = rest.size();
  const auto token = rest.substr(0, end);
  rest.remove_prefix(end);
  return token;
}

// Text after exactly one separator, kept byte-exact.
std::string_view verbatim_tail(std::string_view rest) {
  if (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  return rest;
}

class LineParser {
public:
  LineParser(std::string_view rest, int line) : rest_(rest), line_(line) {}

  ParseError error(const std::string& what) const { return ParseError(what, line_); }

  int level(std::string_view what) {
    const auto v = integer(what);
    if (v != 0 && v != 1) throw error(fmt::format("{}: level must be 0 or 1", what));
    return static_cast<int>(v);
  }

  int counts(std::string_view what) {
    const auto v = integer(what);
    if (v < 0 || v > kAdcMax) throw error(fmt::format("{}: counts must be within 0..1023", what));
    return static_cast<int>(v);
  }

  long long integer(std::string_view what) {
    const auto token = next_token(rest_);
    const auto v = detail::parse_int<long long>(token);
    if (!v) throw error(fmt::format("{}: expected an integer, got '{}'", what, token));
    return *v;
  }

  double number(std::string_view what) {
    const auto token = next_token(rest_);
    const auto v = detail::parse_double(token);
    if (!v) throw error(fmt::format("{}: expected a number, got '{}'", what, token));
    return *v;
  }

  std::string_view word() { return next_token(rest_); }
  std::string_view tail() const { return verbatim_tail(rest_); }

  void finish() {
    if (!detail::trim(rest_).empty()) throw error(fmt::format("unexpected trailing text '{}'", detail::trim(rest_)));
  }

private:
  std::string_view rest_;
  int line_;
};

EventPayload parse_payload(std::string_view name, LineParser& p) {
  if (name == "impact") {
    ev::Impact e{p.level("impact")};
    p.finish();
    return e;
  }
  if (name == "panic") {
    ev::Panic e{p.level("panic")};
    p.finish();
    return e;
  }
  if (name == "alcohol") {
    ev::Alcohol e{p.counts("alcohol")};
    p.finish();
    return e;
  }
  if (name == "rain") {
    ev::Rain e;
    e.wet = p.level("rain wet");
    e.intensity = p.counts("rain intensity");
    p.finish();
    return e;
  }
  if (name == "cabin") {
    ev::Cabin e;
    e.temp_c = p.number("cabin temperature");
    e.humidity_pct = p.number("cabin humidity");
    if (e.humidity_pct < 0.0 || e.humidity_pct > 100.0) throw p.error("cabin humidity must be within 0..100");
    p.finish();
    return e;
  }
  if (name == "gps") {
    const auto text = p.tail();
    if (text.empty()) throw p.error("gps: missing NMEA line");
    return ev::GpsLine{std::string(text)};
  }
  if (name == "fix") {
    ev::GpsFix e;
    e.latitude = p.number("fix latitude");
    e.longitude = p.number("fix longitude");
    if (e.latitude < -90.0 || e.latitude > 90.0 || e.longitude < -180.0 || e.longitude > 180.0) {
      throw p.error("fix: coordinates out of range");
    }
    p.finish();
    return e;
  }
  if (name == "sms") {
    const auto sender = p.word();
    if (sender.empty()) throw p.error("sms: missing sender");
    return ev::SmsIn{std::string(sender), std::string(p.tail())};
  }
  if (name == "fault") {
    const auto mode = p.word();
    if (mode == "error_once") {
      p.finish();
      return ev::ModemErrorOnce{};
    }
    if (mode == "silent") {
      const auto ms = p.integer("fault silent");
      if (ms <= 0) throw p.error("fault silent: duration must be positive");
      p.finish();
      return ev::ModemSilentFor{ms};
    }
    throw p.error(fmt::format("unknown fault mode '{}'", mode));
  }
  throw p.error(fmt::format("unknown event '{}'", name));
}

}  // namespace

std::vector<ScenarioEvent> load_scenario(std::string_view source) {
  std::vector<ScenarioEvent> events;
  int line_no = 0;
  for (const auto raw : detail::split_lines(source)) {
    ++line_no;
    const auto trimmed = detail::trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    auto rest = raw;
    const auto stamp = next_token(rest);
    if (stamp.substr(0, 2) != "t=") throw ParseError(fmt::format("expected 't=<ms>', got '{}'", stamp), line_no);
    const auto t = detail::parse_int<SimMillis>(stamp.substr(2));
    if (!t || *t < 0) throw ParseError(fmt::format("bad time '{}'", stamp), line_no);

    const auto name = next_token(rest);
    LineParser parser(rest, line_no);
    events.push_back({*t, parse_payload(name, parser), line_no});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const ScenarioEvent& a, const ScenarioEvent& b) { return a.t_ms < b.t_ms; });
  return events;
}

std::string render_event(const ScenarioEvent& e) {
  const auto body = std::visit(
      overloaded{
          [](const ev::Impact& x) { return fmt::format("impact {}", x.level); },
          [](const ev::Panic& x) { return fmt::format("panic {}", x.level); },
          [](const ev::Alcohol& x) { return fmt::format("alcohol {}", x.counts); },
          [](const ev::Rain& x) { return fmt::format("rain {} {}", x.wet, x.intensity); },
          [](const ev::Cabin& x) { return fmt::format("cabin {} {}", x.temp_c, x.humidity_pct); },
          [](const ev::GpsLine& x) { return fmt::format("gps {}", x.text); },
          [](const ev::GpsFix& x) { return fmt::format("fix {} {}", x.latitude, x.longitude); },
          [](const ev::SmsIn& x) { return fmt::format("sms {} {}", x.sender, x.body); },
          [](const ev::ModemErrorOnce&) { return std::string("fault error_once"); },
          [](const ev::ModemSilentFor& x) { return fmt::format("fault silent {}", x.duration_ms); },
      },
      e.event);
  return fmt::format("t={} {}", e.t_ms, body);
}

}  // namespace smartcar::sim
