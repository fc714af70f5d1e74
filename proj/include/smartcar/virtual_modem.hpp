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

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "smartcar/modem_session.hpp"
#include "smartcar/types.hpp"

namespace smartcar::sim {

/// SIM900-class modem peer with echo off. Speaks the text-mode subset used by
/// the controller: AT, ATE0/1, AT+IPR, AT+CNMI, AT+CMGF, AT+CMGS, AT+CMGR,
/// AT+CMGD. Anything else is answered with ERROR.
class VirtualModem {
public:
  struct StoredSms {
    std::string sender;
    std::string body;
    SimMillis received_ms = 0;
  };

  struct SentSms {
    std::string destination;
    std::string body;
    SimMillis sent_ms = 0;
  };

  enum class Direction { HostToModem, ModemToHost };

  struct TranscriptEntry {
    Direction direction;
    std::string bytes;
  };

  /// Feeds host bytes and returns everything the modem has to say, including
  /// notifications queued by inject_sms.
  std::string exchange(std::string_view in_bytes, SimMillis now_ms);

  void receive(std::string_view in_bytes, SimMillis now_ms);
  std::string take_output();

  /// Stores an inbound message and queues its +CMTI notice.
  int inject_sms(std::string sender, std::string body, SimMillis now_ms);

  /// The next `count` commands get ERROR.
  void fail_next_commands(int count = 1) { pending_errors_ += count; }
  /// Input is dropped and nothing is sent until `until_ms`.
  void go_silent_until(SimMillis until_ms) { silent_until_ms_ = std::max(silent_until_ms_, until_ms); }

  bool text_mode() const { return text_mode_; }
  bool awaiting_body() const { return awaiting_body_; }
  const std::vector<SentSms>& sent() const { return sent_; }
  const std::map<int, StoredSms>& inbox() const { return inbox_; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }

private:
  void handle_command(std::string_view line);
  void respond(std::string_view bytes);
  bool silent(SimMillis now_ms) const { return now_ms < silent_until_ms_; }

  std::string line_;
  std::string body_;
  std::string destination_;
  bool awaiting_body_ = false;
  bool text_mode_ = false;
  bool echo_ = false;
  int pending_errors_ = 0;
  SimMillis silent_until_ms_ = 0;
  int next_index_ = 1;
  int next_reference_ = 1;
  std::map<int, StoredSms> inbox_;
  std::vector<SentSms> sent_;
  std::string output_;
  std::vector<TranscriptEntry> transcript_;
};

/// Simulation clock: time only moves when someone sleeps on it.
class SimClock : public at::Clock {
public:
  SimMillis now_ms() const override { return now_; }
  void sleep_ms(SimMillis ms) override { now_ += ms; }
  void set(SimMillis t) { now_ = t; }

private:
  SimMillis now_ = 0;
};

/// Connects a ModemSession to a VirtualModem through a SimClock.
class VirtualModemTransport : public at::Transport {
public:
  VirtualModemTransport(VirtualModem& modem, const at::Clock& clock) : modem_(modem), clock_(clock) {}

  bool is_open() const override { return open_; }
  void write(std::string_view bytes) override { modem_.receive(bytes, clock_.now_ms()); }
  std::string read() override { return modem_.take_output(); }
  void close() { open_ = false; }

private:
  VirtualModem& modem_;
  const at::Clock& clock_;
  bool open_ = true;
};

}  // namespace smartcar::sim
