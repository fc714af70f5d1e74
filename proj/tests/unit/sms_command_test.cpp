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

#include <random>

#include <gtest/gtest.h>

#include "smartcar/sms_command.hpp"

namespace smartcar::sms {
namespace {

nmea::GpsState fix_at(double lat, double lon, SimMillis t) {
  nmea::GpsState gps;
  gps.last_fix = GeoFix{lat, lon, t, true, 8};
  gps.last_update_ms = t;
  return gps;
}

TEST(ParseQueryTest, Keywords) {
  EXPECT_EQ(parse_query(" temp \r\n").kind, QueryKind::Temp);
  EXPECT_EQ(parse_query("LOC").kind, QueryKind::Loc);
  EXPECT_EQ(parse_query("Status").kind, QueryKind::Status);
  EXPECT_EQ(parse_query("hum").kind, QueryKind::Hum);
  EXPECT_EQ(parse_query("\thelp").kind, QueryKind::Help);
  const auto unknown = parse_query("OPEN WINDOW");
  EXPECT_EQ(unknown.kind, QueryKind::Unknown);
  EXPECT_EQ(unknown.original, "OPEN WINDOW");
  EXPECT_EQ(parse_query("").kind, QueryKind::Unknown);
  EXPECT_EQ(parse_query("LOC PLEASE").kind, QueryKind::Unknown);
}

// Keyword rendering parses back to the same kind in any letter case.
TEST(ParseQueryTest, CaseInsensitiveRoundTrip) {
  std::mt19937 rng(3);
  for (auto kind : {QueryKind::Status, QueryKind::Temp, QueryKind::Hum, QueryKind::Loc, QueryKind::Help}) {
    for (int i = 0; i < 50; ++i) {
      std::string word(keyword(kind));
      for (auto& c : word) {
        if (rng() % 2) c = static_cast<char>(c - 'A' + 'a');
      }
      EXPECT_EQ(parse_query(word).kind, kind) << word;
    }
  }
}

TEST(FormatReplyTest, Templates) {
  Config config;
  SensorFrame frame;
  frame.t_ms = 2000;
  frame.temp_c = 24.5;
  frame.humidity_pct = 51;
  frame.alcohol_raw = 120;
  frame.rain_wet = 1;
  const auto fresh = fix_at(48.1173, 11.516667, 1000);

  EXPECT_EQ(format_reply({QueryKind::Temp, "TEMP"}, frame, {}, config, true), "TEMP=24.5C");
  EXPECT_EQ(format_reply({QueryKind::Hum, "HUM"}, frame, {}, config, true), "HUM=51%");
  EXPECT_EQ(format_reply({QueryKind::Loc, "LOC"}, frame, fresh, config, true),
            "LOC=48.117300,11.516667 https://maps.google.com/?q=48.117300,11.516667");
  EXPECT_EQ(format_reply({QueryKind::Loc, "LOC"}, frame, {}, config, true), "LOC=UNKNOWN (no GPS fix)");
  EXPECT_EQ(format_reply({QueryKind::Status, "STATUS"}, frame, {}, config, false),
            "TEMP=24.5C HUM=51% ALC=120 RAIN=WET ENGINE=DISABLED");
  EXPECT_EQ(format_reply({QueryKind::Help, "HELP"}, frame, {}, config, true), "CMDS: STATUS TEMP HUM LOC HELP");
  EXPECT_EQ(format_reply({QueryKind::Unknown, "X"}, frame, {}, config, true), "UNKNOWN CMD. SEND HELP");

  frame.t_ms = 1000 + config.gps_stale_ms + 1;
  EXPECT_EQ(format_reply({QueryKind::Loc, "LOC"}, frame, fresh, config, true), "LOC=UNKNOWN (no GPS fix)");
}

TEST(FormatAlertTest, AccidentWithFreshFix) {
  Config config;
  const auto alert = format_alert(AlertKind::Accident, fix_at(48.1173, 11.516667, 1000), config, 5000);
  EXPECT_EQ(alert.kind, AlertKind::Accident);
  EXPECT_EQ(alert.destination, config.alert_primary_number);
  EXPECT_EQ(alert.body,
            "ACCIDENT DETECTED. Location: 48.117300,11.516667 https://maps.google.com/?q=48.117300,11.516667");
}

TEST(FormatAlertTest, Routing) {
  Config config;
  config.alert_primary_number = "+111";
  config.alert_safety_number = "+222";
  const auto gps = fix_at(1, 2, 0);
  EXPECT_EQ(format_alert(AlertKind::Alcohol, gps, config, 0).destination, "+222");
  EXPECT_EQ(format_alert(AlertKind::Panic, gps, config, 0).destination, "+111");
  EXPECT_EQ(format_alert(AlertKind::Accident, gps, config, 0).destination, "+111");
  EXPECT_EQ(format_alert(AlertKind::Alcohol, gps, config, 0).body.substr(0, 49),
            "ALCOHOL LIMIT EXCEEDED. Vehicle interlock engaged");
}

TEST(FormatAlertTest, StaleFixBecomesUnknown) {
  Config config;
  const auto alert = format_alert(AlertKind::Panic, fix_at(1, 2, 0), config, config.gps_stale_ms + 1);
  EXPECT_EQ(alert.body, "PANIC BUTTON PRESSED. Location: UNKNOWN (no GPS fix)");
}

// Length budget and URL/field coordinate agreement across random inputs.
TEST(FormatAlertTest, BodyProperties) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> lat(-90, 90), lon(-180, 180), temp(-60, 90), hum(0, 100);
  std::uniform_int_distribution<int> adc(0, 1023), bit(0, 1);
  Config config;
  for (int i = 0; i < 20000; ++i) {
    const auto gps = bit(rng) ? fix_at(lat(rng), lon(rng), 0) : nmea::GpsState{};
    for (auto kind : {AlertKind::Accident, AlertKind::Panic, AlertKind::Alcohol}) {
      const auto body = format_alert(kind, gps, config, 0).body;
      ASSERT_LE(body.size(), kSmsMaxChars);
      const auto loc = body.find("Location: ");
      ASSERT_NE(loc, std::string::npos);
      const auto url = body.find(kMapsUrlPrefix);
      if (url == std::string::npos) {
        EXPECT_EQ(body.substr(loc + 10), kUnknownLocation);
      } else {
        const auto field = body.substr(loc + 10, body.find(' ', loc + 10) - (loc + 10));
        EXPECT_EQ(body.substr(url + kMapsUrlPrefix.size()), field);
      }
    }
    SensorFrame frame{0, 0, 0, adc(rng), bit(rng), adc(rng), temp(rng), hum(rng)};
    for (auto q : {QueryKind::Status, QueryKind::Temp, QueryKind::Hum, QueryKind::Loc, QueryKind::Help}) {
      const auto reply = format_reply({q, ""}, frame, gps, config, bit(rng) == 1);
      ASSERT_LE(reply.size(), kSmsMaxChars);
      if (q == QueryKind::Loc && reply.find(kMapsUrlPrefix) != std::string::npos) {
        const auto field = reply.substr(4, reply.find(' ') - 4);
        EXPECT_EQ(reply.substr(reply.find(kMapsUrlPrefix) + kMapsUrlPrefix.size()), field);
      }
    }
  }
}

}  // namespace
}  // namespace smartcar::sms
