# Copyright 2026 scmatch Contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Surface-code matching decoder toolkit: independent and correlated MWPM
decoding for perfect-measurement and circuit-level depolarizing noise."""

from scmatch._core import (
    census_no_odd_y_chain,
    decode_events,
    detector_graph_json,
    eq1_ratio,
    fig4_paths,
    layout_json,
    pl_basic,
    pl_ideal,
    run,
    wilson_interval,
)

__all__ = [
    "census_no_odd_y_chain",
    "decode_events",
    "detector_graph_json",
    "eq1_ratio",
    "fig4_paths",
    "layout_json",
    "pl_basic",
    "pl_ideal",
    "run",
    "wilson_interval",
]
