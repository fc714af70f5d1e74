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

#include "smartcar/virtual_modem.hpp"

#include <fmt/format.h>

#include "smartcar/at_protocol.hpp"
#include "text_util.hpp"

namespace smartcar::sim {

namespace {

constexpr std::string_view kOk = "\r\nOK\r\n";
constexpr std::string_view kError = "\r\nERROR\r\n";
constexpr std::string_view kPrompt = "\r\n> ";
constexpr std::string_view kInvalidIndex = "\r\n+CMS ERROR: 321\r\n";

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

// "26/01/01,hh:mm:ss+00" for a simulation instant.
std::string service_timestamp(SimMillis t_ms) {
  const auto secs = t_ms / 1000;
  return fmt::format("26/01/01,{:02d}:{:02d}:{:02d}+00", (secs / 3600) % 24, (secs / 60) % 60, secs % 60);
}

bool valid_destination(std::string_view quoted) {
  if (quoted.size() < 3 || quoted.front() != '"' || quoted.back() != '"') return false;
  auto number = quoted.substr(1, quoted.size() - 2);
  if (number.front() == '+') number.remove_prefix(1);
  if (number.empty()) return false;
  for (char c : number) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

void VirtualModem::respond(std::string_view bytes) {
  output_.append(bytes);
  transcript_.push_back({Direction::ModemToHost, std::string(bytes)});
}

std::string VirtualModem::take_output() { return std::exchange(output_, {}); }

std::string VirtualModem::exchange(std::string_view in_bytes, SimMillis now_ms) {
  receive(in_bytes, now_ms);
  return take_output();
}

int VirtualModem::inject_sms(std::string sender, std::string body, SimMillis now_ms) {
  const int index = next_index_++;
  inbox_[index] = {std::move(sender), std::move(body), now_ms};
  if (!silent(now_ms)) respond(fmt::format("\r\n+CMTI: \"SM\",{}\r\n", index));
  return index;
}

void VirtualModem::receive(std::string_view in_bytes, SimMillis now_ms) {
  if (in_bytes.empty()) return;
  transcript_.push_back({Direction::HostToModem, std::string(in_bytes)});
  if (silent(now_ms)) return;

  for (char c : in_bytes) {
    if (awaiting_body_) {
      if (c == at::kEscape) {
        awaiting_body_ = false;
        body_.clear();
      } else if (c == at::kCtrlZ) {
        awaiting_body_ = false;
        if (body_.size() > kSmsMaxChars) {
          respond(kError);
        } else {
          sent_.push_back({destination_, body_, now_ms});
          respond(fmt::format("\r\n+CMGS: {}\r\n\r\nOK\r\n", next_reference_++));
        }
        body_.clear();
      } else {
        body_.push_back(c);
      }
      continue;
    }

    if (c == '\r') {
      handle_command(std::exchange(line_, {}));
    } else if (c == at::kCtrlZ) {
      // Body terminator outside a CMGS exchange.
      line_.clear();
      respond(kError);
    } else if (c == at::kEscape) {
      line_.clear();
    } else if (c != '\n') {
      line_.push_back(c);
    }
  }
}

void VirtualModem::handle_command(std::string_view raw) {
  const auto line = detail::trim(raw);
  if (line.empty()) return;
  if (echo_) respond(fmt::format("{}\r", line));
  if (pending_errors_ > 0) {
    --pending_errors_;
    respond(kError);
    return;
  }

  const auto upper = detail::to_upper(line);
  const std::string_view cmd = upper;
  const auto arg = [&](std::size_t prefix_len) { return line.substr(prefix_len); };

  if (cmd == "AT") {
    respond(kOk);
  } else if (cmd == "ATE0" || cmd == "ATE1") {
    echo_ = cmd == "ATE1";
    respond(kOk);
  } else if (starts_with(cmd, "AT+IPR=")) {
    // Baud rate has no meaning on a byte pipe; accept the SIM900 range.
    const auto baud = detail::parse_int<long>(arg(7));
    respond(baud && (*baud == 0 || (*baud >= 1200 && *baud <= 115200)) ? kOk : kError);
  } else if (starts_with(cmd, "AT+CNMI=")) {
    respond(kOk);
  } else if (cmd == "AT+CMGF=1" || cmd == "AT+CMGF=0") {
    text_mode_ = cmd.back() == '1';
    respond(kOk);
  } else if (cmd == "AT+CMGF?") {
    respond(fmt::format("\r\n+CMGF: {}\r\n\r\nOK\r\n", text_mode_ ? 1 : 0));
  } else if (starts_with(cmd, "AT+CMGS=")) {
    const auto quoted = arg(8);
    if (!text_mode_ || !valid_destination(quoted)) {
      respond(kError);
      return;
    }
    destination_ = std::string(quoted.substr(1, quoted.size() - 2));
    awaiting_body_ = true;
    body_.clear();
    respond(kPrompt);
  } else if (starts_with(cmd, "AT+CMGR=")) {
    const auto index = detail::parse_int<int>(arg(8));
    const auto it = index ? inbox_.find(*index) : inbox_.end();
    if (it == inbox_.end()) {
      respond(kInvalidIndex);
      return;
    }
    respond(fmt::format("\r\n+CMGR: \"REC UNREAD\",\"{}\",\"\",\"{}\"\r\n{}\r\n\r\nOK\r\n", it->second.sender,
                        service_timestamp(it->second.received_ms), it->second.body));
    inbox_.erase(it);
  } else if (starts_with(cmd, "AT+CMGD=")) {
    const auto index = detail::parse_int<int>(arg(8));
    if (!index) {
      respond(kError);
      return;
    }
    inbox_.erase(*index);
    respond(kOk);
  } else {
    respond(kError);
  }
}

}  // namespace smartcar::sim
