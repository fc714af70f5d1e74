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
#include <variant>
#include <vector>

namespace smartcar::at {

inline constexpr char kCtrlZ = 0x1A;
inline constexpr char kEscape = 0x1B;

namespace cmd {
struct Attention {};
struct SetTextMode {};
struct SendSmsHeader {
  std::string destination;
};
struct SmsBody {
  std::string text;
};
struct ReadSms {
  int index = 0;
};
}  // namespace cmd

using ModemCommand = std::variant<cmd::Attention, cmd::SetTextMode, cmd::SendSmsHeader, cmd::SmsBody, cmd::ReadSms>;

/// Throws std::length_error for an SMS body over 160 characters and
/// std::invalid_argument for control characters in a body or destination.
std::string encode_command(const ModemCommand& command);

namespace event {
struct Ok {
  bool operator==(const Ok&) const = default;
};
struct Error {
  bool operator==(const Error&) const = default;
};
struct Prompt {
  bool operator==(const Prompt&) const = default;
};
struct SmsArrived {
  int index = 0;
  bool operator==(const SmsArrived&) const = default;
};
struct InboundSms {
  std::string sender;
  std::string body;
  bool operator==(const InboundSms&) const = default;
};
struct Line {
  std::string text;
  bool operator==(const Line&) const = default;
};
}  // namespace event

using AtEvent = std::variant<event::Ok, event::Error, event::Prompt, event::SmsArrived, event::InboundSms, event::Line>;

std::string describe(const AtEvent& event);

struct DecodeResult {
  std::vector<AtEvent> events;
  std::string remainder;
};

/// Decodes every complete event at the front of `buffer`. Bytes belonging to
/// an incomplete line (or a `+CMGR:` header still waiting for its body line)
/// are returned untouched as the remainder, so callers can append the next
/// chunk and decode again. `+CMGS: <mr>` reference lines are consumed
/// without producing an event.
DecodeResult decode_stream(std::string_view buffer);

/// Incremental wrapper around decode_stream that owns the remainder.
class StreamDecoder {
public:
  std::vector<AtEvent> feed(std::string_view chunk);
  const std::string& pending() const { return buffer_; }
  void reset() { buffer_.clear(); }

private:
  std::string buffer_;
};

}  // namespace smartcar::at
