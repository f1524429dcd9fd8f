# Copyright 2026 The dnlab Authors
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

"""Python front end for the dnlab core.

The compiled extension does the work; this module only adds dict-level
wrappers around the JSON config runner.
"""

import json

from ._core import (
    ApproxFunction,
    BracketError,
    BudgetError,
    DimensionFunction,
    DivergenceSetup,
    DnlabError,
    DomainError,
    InvariantViolation,
    LowerBoundFailure,
    Problem,
    ValidationError,
    __version__,
    content_ratio,
    epsilon_b,
    find_witness,
    gamma_u,
    gamma_via_cover,
    nearest_int_dist,
    phi_profile,
    rect_content_closed,
    rect_content_oracle,
    rprime_measure_exact_1d,
    series_verdict,
    shell_sum,
    t_of_u,
)
from ._core import run_json as _run_json


def run(subcommand, config, workers=0):
    """Run a CLI subcommand on a config dict.

    Returns (exit_code, report, csv_text_or_None), exactly as the command line
    tool would write them.
    """
    code, report, csv = _run_json(subcommand, json.dumps(config), workers)
    return code, json.loads(report), csv


__all__ = [name for name in dir() if not name.startswith("_")]
