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
#include <vector>

#include "smartcar/config.hpp"
#include "smartcar/controller.hpp"
#include "smartcar/scenario.hpp"
#include "smartcar/types.hpp"

namespace smartcar::sim {

struct OutboundSms {
  SimMillis t_ms = 0;  // when the send exchange began
  std::string destination;
  std::string body;
  std::string origin;  // "ALERT ACCIDENT", "REPLY", ...
  bool delivered = false;
  int attempts = 0;
  std::string failure_reason;
};

/// One line of the time-stamped log: controller actions plus the harness's
/// own delivery records (SMS_BEGIN, SMS_DELIVERED, DELIVERY_FAILED, ...).
struct ActionRecord {
  SimMillis t_ms = 0;
  SimMillis cause_ms = 0;  // time of the input that produced it
  std::string text;
};

struct Counters {
  int sentences_parsed = 0;
  int checksum_failures = 0;
  int unsupported_sentences = 0;
  int sms_retries = 0;
  int inbound_sms = 0;
  int fetch_failures = 0;
  int frames = 0;
};

struct SimReport {
  SimMillis until_ms = 0;
  SimMillis end_ms = 0;
  std::vector<OutboundSms> outbound_sms;
  std::vector<ActionRecord> actions;
  control::ControllerState final_state;
  Counters counters;
  std::vector<std::string> violations;
};

/// Fixed-tick executor. Each tick delivers due scenario events, forwards GPS
/// lines, samples the sensor board, drains modem notifications, and acts on
/// the controller's output. SMS exchanges block in simulated time, so the
/// clock can jump by the length of a retry sequence.
SimReport run(const std::vector<ScenarioEvent>& scenario, const Config& config, SimMillis until_ms);

/// Line-oriented, stable field order; identical inputs give identical bytes.
std::string serialize(const SimReport& report);

}  // namespace smartcar::sim
