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

#include "smartcar/at_protocol.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "smartcar/types.hpp"
#include "text_util.hpp"

namespace smartcar::at {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_printable_ascii(char c) { return c >= 0x20 && c < 0x7F; }

void require_printable(std::string_view text, std::string_view what) {
  for (char c : text) {
    if (!is_printable_ascii(c)) throw std::invalid_argument(fmt::format("{}: non-printable character", what));
  }
}

bool is_frame_char(char c) { return c == '\r' || c == '\n'; }

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// Quoted fields of a response line, in order: `+CMGR: "REC UNREAD","+1555",...`.
std::vector<std::string_view> quoted_fields(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto open = line.find('"');
    if (open == std::string_view::npos) break;
    const auto close = line.find('"', open + 1);
    if (close == std::string_view::npos) break;
    out.push_back(line.substr(open + 1, close - open - 1));
    line.remove_prefix(close + 1);
  }
  return out;
}

AtEvent classify_line(std::string_view line) {
  if (line == "OK") return event::Ok{};
  if (line == "ERROR" || starts_with(line, "+CMS ERROR") || starts_with(line, "+CME ERROR")) return event::Error{};
  if (starts_with(line, "+CMTI:")) {
    const auto comma = line.rfind(',');
    if (comma != std::string_view::npos) {
      if (auto index = detail::parse_int<int>(detail::trim(line.substr(comma + 1)))) {
        return event::SmsArrived{*index};
      }
    }
  }
  return event::Line{std::string(line)};
}

}  // namespace

std::string encode_command(const ModemCommand& command) {
  return std::visit(
      overloaded{
          [](const cmd::Attention&) { return std::string("AT\r"); },
          [](const cmd::SetTextMode&) { return std::string("AT+CMGF=1\r"); },
          [](const cmd::SendSmsHeader& c) {
            require_printable(c.destination, "destination");
            if (c.destination.find('"') != std::string::npos) {
              throw std::invalid_argument("destination: embedded quote");
            }
            return fmt::format("AT+CMGS=\"{}\"\r", c.destination);
          },
          [](const cmd::SmsBody& c) {
            if (c.text.size() > kSmsMaxChars) {
              throw std::length_error(fmt::format("SMS body is {} characters, limit is {}", c.text.size(), kSmsMaxChars));
            }
            require_printable(c.text, "SMS body");
            return c.text + kCtrlZ;
          },
          [](const cmd::ReadSms& c) { return fmt::format("AT+CMGR={}\r", c.index); },
      },
      command);
}

std::string describe(const AtEvent& ev) {
  return std::visit(overloaded{
                        [](const event::Ok&) { return std::string("OK"); },
                        [](const event::Error&) { return std::string("ERROR"); },
                        [](const event::Prompt&) { return std::string("PROMPT"); },
                        [](const event::SmsArrived& e) { return fmt::format("SMS_ARRIVED {}", e.index); },
                        [](const event::InboundSms& e) { return fmt::format("INBOUND {} {}", e.sender, e.body); },
                        [](const event::Line& e) { return fmt::format("LINE {}", e.text); },
                    },
                    ev);
}

DecodeResult decode_stream(std::string_view buf) {
  DecodeResult out;
  std::size_t pos = 0;
  const auto size = buf.size();
  const auto find_eol = [&](std::size_t from) {
    for (auto i = from; i < size; ++i) {
      if (is_frame_char(buf[i])) return i;
    }
    return std::string_view::npos;
  };

  while (true) {
    while (pos < size && is_frame_char(buf[pos])) ++pos;
    if (pos == size) break;

    // Prompt "> " has no line terminator; wait for the byte after '>' so a
    // split between '>' and ' ' decodes the same as the whole prompt.
    if (buf[pos] == '>') {
      if (pos + 1 == size) break;
      out.events.emplace_back(event::Prompt{});
      pos += buf[pos + 1] == ' ' ? 2 : 1;
      continue;
    }

    const auto eol = find_eol(pos);
    if (eol == std::string_view::npos) break;
    const auto line = buf.substr(pos, eol - pos);

    if (starts_with(line, "+CMGR:")) {
      // Header line, then exactly one body line.
      std::size_t body_start = eol;
      if (buf[body_start] == '\r') {
        if (body_start + 1 == size) break;
        ++body_start;
        if (buf[body_start] == '\n') ++body_start;
      } else {
        ++body_start;
      }
      std::size_t body_end = body_start;
      while (body_end < size && !is_frame_char(buf[body_end])) ++body_end;
      if (body_end == size) break;
      const auto fields = quoted_fields(line);
      out.events.emplace_back(event::InboundSms{fields.size() > 1 ? std::string(fields[1]) : std::string(),
                                                std::string(buf.substr(body_start, body_end - body_start))});
      pos = body_end;
      continue;
    }

    // The CMGS message reference carries nothing the session uses.
    if (!starts_with(line, "+CMGS:")) out.events.push_back(classify_line(line));
    pos = eol;
  }

  out.remainder = std::string(buf.substr(pos));
  return out;
}

std::vector<AtEvent> StreamDecoder::feed(std::string_view chunk) {
  buffer_.append(chunk);
  auto result = decode_stream(buffer_);
  buffer_ = std::move(result.remainder);
  return std::move(result.events);
}

}  // namespace smartcar::at
