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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smartcar/at_protocol.hpp"
#include "smartcar/config.hpp"
#include "smartcar/controller.hpp"
#include "smartcar/nmea.hpp"
#include "smartcar/scenario.hpp"
#include "smartcar/simulator.hpp"
#include "smartcar/sms_command.hpp"

namespace py = pybind11;
using namespace smartcar;

namespace {

py::tuple event_tuple(const at::AtEvent& ev) {
  return std::visit(
      [](const auto& e) -> py::tuple {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, at::event::Ok>) return py::make_tuple("ok");
        if constexpr (std::is_same_v<T, at::event::Error>) return py::make_tuple("error");
        if constexpr (std::is_same_v<T, at::event::Prompt>) return py::make_tuple("prompt");
        if constexpr (std::is_same_v<T, at::event::SmsArrived>) return py::make_tuple("sms_arrived", e.index);
        if constexpr (std::is_same_v<T, at::event::InboundSms>) return py::make_tuple("inbound_sms", e.sender, e.body);
        if constexpr (std::is_same_v<T, at::event::Line>) return py::make_tuple("line", e.text);
      },
      ev);
}

std::string_view kind_name(nmea::SentenceKind kind) {
  switch (kind) {
    case nmea::SentenceKind::Gga: return "GGA";
    case nmea::SentenceKind::Rmc: return "RMC";
    case nmea::SentenceKind::Unsupported: break;
  }
  return "UNSUPPORTED";
}

AlertKind alert_kind(std::string_view name) {
  if (name == "accident") return AlertKind::Accident;
  if (name == "panic") return AlertKind::Panic;
  if (name == "alcohol") return AlertKind::Alcohol;
  throw py::value_error("alert kind must be 'accident', 'panic' or 'alcohol'");
}

control::WiperMode wiper_from_name(std::string_view name) {
  for (auto m : {control::WiperMode::Off, control::WiperMode::Intermittent, control::WiperMode::Low,
                 control::WiperMode::High}) {
    if (control::to_string(m) == name) return m;
  }
  throw py::value_error("wiper mode must be OFF, INTERMITTENT, LOW or HIGH");
}

py::bytes to_bytes(const std::string& s) { return py::bytes(s); }

}  // namespace

PYBIND11_MODULE(_smartcar, m) {
  m.doc() = "Smart-car safety controller core: NMEA, AT/SMS protocol, controller, simulator";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("validate_checksum", &nmea::validate_checksum, py::arg("line"));
  m.def("to_decimal_degrees", &nmea::to_decimal_degrees, py::arg("raw"), py::arg("hemisphere"));
  m.def(
      "parse_sentence",
      [](std::string_view line) {
        const auto s = nmea::parse_sentence(line);
        py::dict d;
        d["kind"] = kind_name(s.kind);
        d["fields"] = s.raw_fields;
        d["checksum_ok"] = s.checksum_ok;
        return d;
      },
      py::arg("line"));
  m.def(
      "decode_fix",
      [](std::string_view line, SimMillis now_ms) -> py::object {
        const auto update = nmea::update_fix({}, nmea::parse_sentence(line), now_ms);
        if (!update.state.last_fix) return py::none();
        const auto& f = *update.state.last_fix;
        return py::make_tuple(f.latitude, f.longitude, f.satellites);
      },
      py::arg("line"), py::arg("now_ms") = 0, "Decoded (lat, lon, satellites) of one sentence, or None.");

  m.def("encode_attention", [] { return to_bytes(at::encode_command(at::cmd::Attention{})); });
  m.def("encode_text_mode", [] { return to_bytes(at::encode_command(at::cmd::SetTextMode{})); });
  m.def(
      "encode_sms_header", [](std::string dest) { return to_bytes(at::encode_command(at::cmd::SendSmsHeader{dest})); },
      py::arg("destination"));
  m.def(
      "encode_sms_body", [](std::string text) { return to_bytes(at::encode_command(at::cmd::SmsBody{text})); },
      py::arg("text"));
  m.def(
      "encode_read_sms", [](int index) { return to_bytes(at::encode_command(at::cmd::ReadSms{index})); },
      py::arg("index"));
  m.def(
      "decode_stream",
      [](const py::bytes& buffer) {
        const auto result = at::decode_stream(std::string(buffer));
        py::list events;
        for (const auto& ev : result.events) events.append(event_tuple(ev));
        return py::make_tuple(events, to_bytes(result.remainder));
      },
      py::arg("buffer"));

  m.def(
      "parse_query",
      [](std::string_view body) {
        const auto q = sms::parse_query(body);
        return q.kind == sms::QueryKind::Unknown ? std::string("UNKNOWN") : std::string(sms::keyword(q.kind));
      },
      py::arg("body"));
  m.def(
      "format_alert",
      [](std::string_view kind, std::optional<std::pair<double, double>> fix, const std::string& config_text) {
        const auto config = load_config(config_text);
        nmea::GpsState gps;
        if (fix) gps.last_fix = GeoFix{fix->first, fix->second, 0, true, 0};
        const auto alert = sms::format_alert(alert_kind(kind), gps, config, 0);
        return py::make_tuple(alert.destination, alert.body);
      },
      py::arg("kind"), py::arg("fix") = py::none(), py::arg("config") = "",
      "(destination, body) for an alert with an optional fresh (lat, lon) fix.");

  m.def(
      "wiper_mode",
      [](int wet, int intensity, const std::string& config_text) {
        return std::string(control::to_string(control::wiper_mode(wet, intensity, load_config(config_text))));
      },
      py::arg("rain_wet"), py::arg("rain_intensity"), py::arg("config") = "");
  m.def(
      "servo_angle", [](std::string_view mode, SimMillis phase_ms) { return control::servo_angle(wiper_from_name(mode), phase_ms); },
      py::arg("mode"), py::arg("phase_ms"));

  m.def(
      "load_config", [](std::string_view text) { return serialize_config(load_config(text)); }, py::arg("text"),
      "Validates config text and returns it normalized with every key.");
  m.def(
      "check_scenario", [](std::string_view text) { return sim::load_scenario(text).size(); }, py::arg("text"));
  m.def(
      "run_scenario",
      [](std::string_view scenario_text, std::string_view config_text, SimMillis until_ms) {
        const auto scenario = sim::load_scenario(scenario_text);
        const auto config = load_config(config_text);
        py::gil_scoped_release release;
        return sim::serialize(sim::run(scenario, config, until_ms));
      },
      py::arg("scenario"), py::arg("config") = "", py::arg("until_ms") = 60000,
      "Runs a scenario and returns the serialized report.");
}
