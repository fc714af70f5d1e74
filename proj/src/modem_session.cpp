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

#include "smartcar/modem_session.hpp"

namespace smartcar::at {

void ModemSession::pump() {
  for (auto& ev : decoder_.feed(transport_.read())) received_.push_back(std::move(ev));
}

ModemSession::Wait ModemSession::await(bool want_prompt, SimMillis timeout_ms, SimMillis poll_ms,
                                       std::optional<event::InboundSms>* inbound) {
  const auto start = clock_.now_ms();
  for (;;) {
    if (!transport_.is_open()) return Wait::Closed;
    pump();
    while (!received_.empty()) {
      auto ev = std::move(received_.front());
      received_.pop_front();
      if (std::holds_alternative<event::Ok>(ev)) return Wait::Ok;
      if (std::holds_alternative<event::Error>(ev)) return Wait::Error;
      if (std::holds_alternative<event::Prompt>(ev)) {
        if (want_prompt) return Wait::Prompt;
        continue;
      }
      if (auto* msg = std::get_if<event::InboundSms>(&ev); msg && inbound) {
        *inbound = std::move(*msg);
        continue;
      }
      // Intermediate result lines ("+CMGS: 7") belong to the command in flight.
      if (std::holds_alternative<event::Line>(ev)) continue;
      unsolicited_.push_back(std::move(ev));
    }
    if (clock_.now_ms() - start >= timeout_ms) return Wait::Timeout;
    clock_.sleep_ms(poll_ms);
  }
}

SendOutcome ModemSession::send_sms(std::string_view destination, std::string_view body, const Config& config) {
  const auto header = encode_command(cmd::SendSmsHeader{std::string(destination)});
  const auto payload = encode_command(cmd::SmsBody{std::string(body)});
  const auto text_mode = encode_command(cmd::SetTextMode{});

  if (!transport_.is_open()) return {false, 1, "transport closed"};

  const auto timeout = config.sms_ok_timeout_ms;
  const auto poll_ms = config.tick_ms;
  const auto attempt_once = [&]() -> Wait {
    // Late replies from an abandoned attempt must not satisfy this one.
    pump();
    for (auto& ev : received_) {
      if (std::holds_alternative<event::SmsArrived>(ev) || std::holds_alternative<event::InboundSms>(ev)) {
        unsolicited_.push_back(std::move(ev));
      }
    }
    received_.clear();

    transport_.write(text_mode);
    if (auto w = await(false, timeout, poll_ms); w != Wait::Ok) return w;

    transport_.write(header);
    if (auto w = await(true, timeout, poll_ms); w != Wait::Prompt) {
      if (w == Wait::Timeout) transport_.write(std::string(1, kEscape));
      return w == Wait::Ok ? Wait::Error : w;
    }

    transport_.write(payload);
    return await(false, timeout, poll_ms);
  };

  std::string reason;
  const int max_attempts = config.sms_retry_max + 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (attempt > 1) clock_.sleep_ms(config.sms_retry_backoff_ms);
    switch (attempt_once()) {
      case Wait::Ok:
        return {true, attempt, {}};
      case Wait::Closed:
        return {false, attempt, "transport closed"};
      case Wait::Timeout:
        reason = "timeout";
        break;
      default:
        reason = "error";
        break;
    }
  }
  return {false, max_attempts, reason};
}

FetchOutcome ModemSession::fetch_inbound(int index, const Config& config) {
  if (!transport_.is_open()) return {std::nullopt, "transport closed"};
  transport_.write(encode_command(cmd::ReadSms{index}));
  std::optional<event::InboundSms> message;
  switch (await(false, config.sms_ok_timeout_ms, config.tick_ms, &message)) {
    case Wait::Ok:
      if (message) return {std::move(message), {}};
      return {std::nullopt, "empty response"};
    case Wait::Timeout:
      return {std::nullopt, "timeout"};
    case Wait::Closed:
      return {std::nullopt, "transport closed"};
    default:
      return {std::nullopt, "error"};
  }
}

std::deque<AtEvent> ModemSession::poll() {
  pump();
  for (auto& ev : received_) {
    if (std::holds_alternative<event::SmsArrived>(ev) || std::holds_alternative<event::InboundSms>(ev) ||
        std::holds_alternative<event::Line>(ev)) {
      unsolicited_.push_back(std::move(ev));
    }
  }
  received_.clear();
  return std::exchange(unsolicited_, {});
}

}  // namespace smartcar::at
