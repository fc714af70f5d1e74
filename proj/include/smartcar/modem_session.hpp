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
#include <string_view>

#include "smartcar/at_protocol.hpp"
#include "smartcar/config.hpp"
#include "smartcar/types.hpp"

namespace smartcar::at {

/// Byte pipe to a modem. `read` is non-blocking and returns whatever the peer
/// has produced so far.
class Transport {
public:
  virtual ~Transport() = default;
  virtual bool is_open() const = 0;
  virtual void write(std::string_view bytes) = 0;
  virtual std::string read() = 0;
};

/// Time source for the blocking exchanges. The simulator advances a virtual
/// clock; nothing here reads wall time.
class Clock {
public:
  virtual ~Clock() = default;
  virtual SimMillis now_ms() const = 0;
  virtual void sleep_ms(SimMillis ms) = 0;
};

struct SendOutcome {
  bool delivered = false;
  int attempts = 0;
  std::string failure_reason;
};

struct FetchOutcome {
  std::optional<event::InboundSms> message;
  std::string failure_reason;
};

/// Text-mode SMS exchange over one transport. Not thread-safe; one owner.
///
/// Unsolicited events seen while waiting on a command (new-message notices,
/// stray lines) are queued and handed out by `poll`.
class ModemSession {
public:
  ModemSession(Transport& transport, Clock& clock) : transport_(transport), clock_(clock) {}

  ModemSession(const ModemSession&) = delete;
  ModemSession& operator=(const ModemSession&) = delete;

  /// CMGF=1, CMGS (wait for '>'), body + CTRL-Z (wait for OK). Any ERROR or
  /// timeout restarts the whole sequence after the backoff, at most
  /// `config.sms_retry_max` times.
  SendOutcome send_sms(std::string_view destination, std::string_view body, const Config& config);

  /// Reads and consumes message `index` via AT+CMGR.
  FetchOutcome fetch_inbound(int index, const Config& config);

  /// Drains the transport and returns every event not consumed by an exchange.
  std::deque<AtEvent> poll();

private:
  enum class Wait { Ok, Error, Prompt, Timeout, Closed };

  Wait await(bool want_prompt, SimMillis timeout_ms, SimMillis poll_ms,
             std::optional<event::InboundSms>* inbound = nullptr);
  void pump();

  Transport& transport_;
  Clock& clock_;
  StreamDecoder decoder_;
  std::deque<AtEvent> received_;
  std::deque<AtEvent> unsolicited_;
};

}  // namespace smartcar::at
