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

import math

import pytest

import dnlab


def one_by_two(sigma, s):
    return dnlab.Problem([1.0], [0.5, 0.5], dnlab.ApproxFunction.power(1.0, sigma), dnlab.DimensionFunction.power(s))


def test_gamma_on_equal_weights():
    g = dnlab.gamma_u(one_by_two(1.0, 1.8), [4])
    assert g["t_u"] == pytest.approx(4.0)
    assert g["gamma"] == pytest.approx(4.0 ** -2.7, rel=1e-12)
    assert dnlab.gamma_via_cover(one_by_two(1.0, 1.8), [4]) == pytest.approx(g["gamma"], rel=1e-12)


def test_series_verdicts():
    assert dnlab.series_verdict(one_by_two(0.5, 1.8), 1024)["verdict"] == "converges"
    assert dnlab.series_verdict(one_by_two(0.5, 1.2), 1024)["verdict"] == "diverges"


def test_content():
    f = dnlab.DimensionFunction.power(1.5)
    assert dnlab.rect_content_closed(f, [0.25, 0.5]) == pytest.approx(0.25)
    assert 0.25 <= dnlab.rect_content_oracle(f, [0.25, 0.5]) <= 4.0


def test_witness_and_distances():
    assert dnlab.nearest_int_dist(0.7) == pytest.approx(0.3)
    assert dnlab.epsilon_b([0.3, 0.5]) == pytest.approx(0.075)
    assert dnlab.find_witness([[0.4]], [0.0], 0.5, 2.0) == [1]
    assert dnlab.find_witness([[0.5]], [0.0], 0.5, 2.0) is None


def test_divergence_setup():
    setup = dnlab.DivergenceSetup(one_by_two(0.5, 1.5), [0.3])
    assert 0.0 < setup.c_tilde < 1.0
    p = dnlab.phi_profile(setup, [9])
    if p["active"]:
        assert math.prod(p["phi"]) == pytest.approx(p["gamma"] * 81, rel=1e-9)
    assert dnlab.rprime_measure_exact_1d(1, 0.1) == pytest.approx(0.2)


def test_errors_are_typed():
    with pytest.raises(dnlab.ValidationError):
        dnlab.Problem([1.0], [0.7, 0.7], dnlab.ApproxFunction.power(1.0, 1.0), dnlab.DimensionFunction.power(1.5))
    with pytest.raises(dnlab.BracketError):
        dnlab.Problem([1.0], [0.5, 0.5], dnlab.ApproxFunction.power(1.0, 1.0), dnlab.DimensionFunction.power(2.5))
    assert issubclass(dnlab.BracketError, dnlab.DomainError)


def test_run_matches_cli_contract():
    config = {"m": 1, "n": 2, "psi": {"family": "power", "sigma": 0.5}, "f": {"s": 1.8}, "r_max": 512}
    code, report, csv = dnlab.run("verdict", config)
    assert code == 0
    assert report["result"]["verdict"] == "converges"
    code, report, _ = dnlab.run("verdict", {**config, "n": 1})
    assert code == 2
    with pytest.raises(dnlab.ValidationError):
        dnlab.run("verdict", {"m": 1})
