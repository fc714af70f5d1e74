# Copyright (c) 2026 The smartcar-sim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the smart-car safety controller core."""

from ._smartcar import (  # noqa: F401
    ParseError,
    ValidationError,
    check_scenario,
    decode_fix,
    decode_stream,
    encode_attention,
    encode_read_sms,
    encode_sms_body,
    encode_sms_header,
    encode_text_mode,
    format_alert,
    load_config,
    parse_query,
    parse_sentence,
    run_scenario,
    servo_angle,
    to_decimal_degrees,
    validate_checksum,
    wiper_mode,
)

__version__ = "0.1.0"
