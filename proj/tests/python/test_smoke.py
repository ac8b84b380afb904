# Copyright 2026 The parafermion-rp Authors
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

import cmath
import json
import math

import numpy as np
import pytest

import pfrp


def test_relations():
    rep = pfrp.Representation(3, 4)
    assert rep.dimension == 9
    assert pfrp.verify_yamazaki(rep)["max"] < 1e-11
    c1, c2 = rep.generator(1), rep.generator(2)
    w = cmath.exp(2j * math.pi / 3)
    assert np.allclose(c1 @ c2, w * c2 @ c1)


def test_polynomial_product_matches_matrices():
    rep = pfrp.Representation(3, 2)
    a = pfrp.Polynomial.monomial(pfrp.ExponentVector(3, [0, 1]))
    b = pfrp.Polynomial.monomial(pfrp.ExponentVector(3, [1, 0]), 2 - 1j)
    assert np.allclose(rep.to_matrix(a * b), rep.to_matrix(a) @ rep.to_matrix(b))
    assert np.allclose(rep.to_matrix(pfrp.adjoint(b)), rep.to_matrix(b).conj().T)
    assert pfrp.approx_equal(pfrp.reflect(pfrp.reflect(b)), b)


def test_text_round_trip():
    p = pfrp.Polynomial.parse("2*z^1 * c1 c2^2\n(0.5,-1) * 1\n", 3, 2)
    assert len(p) == 2
    assert pfrp.approx_equal(pfrp.Polynomial.parse(str(p), 3, 2), p)


def test_baxter_rp_check():
    spec = pfrp.baxter(3, 4, [-0.5, -1.0, -0.5])
    assert spec.rule == "all_nonneg"
    report = pfrp.check_rp(spec, pfrp.Representation(3, 4), samples=100, seed=7)
    assert report["violations"] == []
    assert report["partition_function"][0] > 0


def test_counterexample_value():
    f = pfrp.counterexample_f(2, 1, pfrp.Representation(2, 2))
    assert abs(f - 2j * math.sinh(1.0)) < 1e-10


def test_run_command():
    code, out, err = pfrp.run("counterexample", n=2)
    assert code == 2
    assert json.loads(out)["positive"] is False
    code, _, err = pfrp.run("rp-check")
    assert code == 1 and "--spec" in err


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        pfrp.ExponentVector(3, [3, 0])
    with pytest.raises(RuntimeError):
        pfrp.Representation(3, 16)
