import json
import math
import pathlib
from fractions import Fraction

import jsonschema
import numpy as np
import pytest

import vvjack

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


def validate(doc, name):
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{name}.schema.json").read_text()))


def test_tableaux():
    doc = vvjack.tableaux([2, 2])
    validate(doc, "tableaux")
    assert vvjack.rational(doc["tableaux"][1]["norm0"]) == Fraction(3, 4)


def test_nsjp_spectral_vector():
    k = Fraction(1, 10)
    doc = vvjack.nsjp("2,1", [0, 1, 1], k, tableau=0)
    validate(doc, "nsjp")
    assert [Fraction(x) for x in doc["spectral_vector"]] == [1, 2 + k, 2 - k]
    doc = vvjack.nsjp([2, 1], [0, 1, 1], "1/10", tableau=[-1, 1, 0])
    assert [Fraction(x) for x in doc["spectral_vector"]] == [1, 2 - k, 2 + k]


def test_norm_agrees():
    doc = vvjack.norm([3, 1], [2, 0, 1, 1], "-1/7", tableau=2)
    validate(doc, "norm")
    assert doc["agree"]


def test_jack_example():
    doc = vvjack.jack([2, 2], [1, 1, 0, 0], "1/10")
    validate(doc, "jack")
    j = doc["jacks"][0]
    assert j["eigenvalue"] == "91/50"
    k = Fraction(1, 10)
    assert Fraction(j["norm"]) == Fraction(9, 2) * (1 - 3 * k) * (1 - 2 * k) / (1 - k)
    m = vvjack.minimal_jack([2, 2], "1/10")
    validate(m, "jack")
    assert m["coefficients"] == j["coefficients"]


def test_count_series():
    doc = vvjack.count([3, 2], 8)
    validate(doc, "count")
    assert doc["series"] == [0, 0, 1, 2, 4, 7, 12, 18, 27]


def test_suites():
    doc = vvjack.verify([2, 1], "2/17", max_degree=2, samples=3)
    validate(doc, "report")
    assert doc["passed"]
    doc = vvjack.wave_check([2, 1], -0.1, points=3)
    validate(doc, "report")
    assert doc["passed"]


def test_integrate_and_density():
    base = [2 * math.pi * j / 4 for j in range(4)]
    L = vvjack.integrate_L([2, 2], 0.1, base)
    assert L.shape == (2, 2) and L.dtype == np.complex128
    assert np.allclose(L, np.eye(2), atol=1e-15)
    x = [0.0, 1.2, 2.9, 4.6]
    L = vvjack.integrate_L([2, 2], 0.1, x)
    assert abs(np.linalg.det(L)) > 0
    rot = vvjack.integrate_L([2, 2], 0.1, [t + 0.3 for t in x])
    assert np.allclose(L, rot, atol=1e-9)
    assert np.allclose(L, vvjack.integrate_L([2, 2], "1/10", x), atol=1e-15)
    d = vvjack.density([2, 2], 0.1, [x, [x[1], x[0], x[2], x[3]]])
    assert d.shape == (2,)
    assert d[0] >= 0 and abs(d[0] - d[1]) < 1e-8


def test_errors():
    with pytest.raises(vvjack.InadmissibleKappa):
        vvjack.nsjp([2, 2], [0, 1, 1, 0], "1/2")
    with pytest.raises(vvjack.InvalidShape):
        vvjack.tableaux([1, 2])
    with pytest.raises(vvjack.InvalidArgument):
        vvjack.jack([2, 2], [1, 1, 0, 0], "1/10", tableau=0)
    with pytest.raises(vvjack.RegularityError):
        vvjack.integrate_L([2, 1], 0.1, [0.0, 0.0, 1.0])
    assert issubclass(vvjack.InadmissibleKappa, vvjack.VVJackError)
    assert issubclass(vvjack.VVJackError, RuntimeError)
