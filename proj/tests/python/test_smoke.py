"""Smoke tests for the Python bindings: every exported operation runs and
returns the same exact values the native test suite checks in depth."""

import json
from fractions import Fraction

import parhiggs


def frac(s):
    return Fraction(s)


def test_version():
    assert parhiggs.__version__ == "1.0.0"


def test_construct_and_certify():
    res = json.loads(parhiggs.construct_constant(1, 2, 5, 2))
    assert res["feasible"]
    assert res["d"] == 3
    mw = res["multiweight"]
    assert all(frac(a[0]) == Fraction(4, 15) for a in mw["alpha"])
    assert all(frac(b[0]) == Fraction(11, 30) for b in mw["beta"])
    cert = res["certificate"]
    assert cert["pass"]
    assert frac(cert["epsilon"]) == Fraction(1, 2)

    again = json.loads(parhiggs.certificate(json.dumps(mw), 3))
    assert again == cert

    assert parhiggs.validate_multiweight(json.dumps(mw)) == []


def test_default_profile_and_a_range():
    assert parhiggs.default_epsilon_profile(1, 2, 5, 2) == ["1/10"] * 5
    ar = json.loads(parhiggs.a_range(1, 2, 5))
    assert ar["integers"] == [2, 3]


def test_torsion_twist_is_cyclic():
    res = json.loads(parhiggs.construct_constant(1, 2, 3, 2))
    mw, d = res["multiweight"], res["d"]
    state = (json.dumps(mw), d)
    for _ in range(3):
        tw = json.loads(parhiggs.torsion_twist([1, 1, -2], state[0], state[1]))
        state = (json.dumps(tw["multiweight"]), tw["d"])
    assert json.loads(state[0]) == mw
    assert state[1] == d


def test_holonomy_phases_are_elliptic():
    res = json.loads(parhiggs.construct_constant(1, 2, 5, 2))
    import cmath

    for row in parhiggs.holonomy(json.dumps(res["multiweight"])):
        eig = [cmath.exp(2j * cmath.pi * float(Fraction(w))) for w in row]
        assert parhiggs.elliptic_check(eig)
        assert parhiggs.translation_length(eig) < 1e-9


def test_king_verdict_and_existence():
    zero = {
        "field": "fp",
        "modulus": 5,
        "p": 2,
        "q": 2,
        "r": 2,
        "mats": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
    }
    v = json.loads(parhiggs.king_verdict(json.dumps(zero)))
    assert v["status"] == "Unstable"

    assert json.loads(parhiggs.existence(2, 3, 5))["class"] == "HasStable"
    assert json.loads(parhiggs.existence(2, 2, 2))["class"] == "SpecialSquare"
    assert json.loads(parhiggs.existence(1, 2, 1))["class"] == "Empty"


def test_pencil():
    a1 = [["1/1", "0/1"], ["0/1", "1/1"]]
    a2 = [["1/1", "0/1"], ["0/1", "2/1"]]
    res = json.loads(parhiggs.pencil(json.dumps(a1), json.dumps(a2)))
    assert res["semistable"]
    assert [frac(c) for c in res["form"]] == [1, 3, 2]


def test_feathered_reduces_to_plain_verdict_at_zero_weights():
    tup = {
        "field": "fp",
        "modulus": 5,
        "p": 1,
        "q": 1,
        "r": 3,
        "mats": [[[1]], [[2]], [[3]]],
    }
    flags = parhiggs.standard_flags(1, 1, 2, 5)
    feathers = json.dumps({"eta": [["0/1"], ["0/1"]], "zeta": [["0/1"], ["0/1"]]})
    fv = json.loads(parhiggs.feathered_verdict(json.dumps(tup), flags, feathers))
    kv = json.loads(parhiggs.king_verdict(json.dumps(tup)))
    assert fv["status"] == kv["status"] == "Stable"


def test_bundle_dictionary():
    bd = json.loads(parhiggs.bundle_data(1, 2, 5, 2))
    assert bd["deg_vec_u"] == [-1]
    assert bd["deg_vec_v"] == [-2, -2]
    assert bd["sections_dim"] == 3
    assert bd["d"] == 3

    res = json.loads(parhiggs.construct_constant(1, 2, 5, 2))
    mwj = json.dumps(res["multiweight"])
    assert frac(parhiggs.invariant_degree(mwj, 1, 1)) == Fraction(1, 6)
    assert frac(parhiggs.invariant_degree(mwj, 0, 0)) == 0

    stable = {
        "field": "fp",
        "modulus": 5,
        "p": 1,
        "q": 2,
        "r": 3,
        "mats": [[[1], [0]], [[0], [1]], [[1], [1]]],
    }
    rep = json.loads(parhiggs.equivalence_check(json.dumps(stable), mwj, 3))
    assert rep["agree"]
    assert rep["quiver_verdict"]["status"] == "Stable"


def test_su11_component():
    c = json.loads(parhiggs.su11_component(5, ["11/20"]))
    assert c["feasible"] and c["dim"] == 2
    bad = json.loads(parhiggs.su11_component(5, ["4/5"]))
    assert not bad["feasible"]


def test_real_form_generators():
    g = json.loads(parhiggs.sostar_construct(3, seed=11))
    assert g["used_fallback"]
    mats = g["tuple"]["mats"]
    for mat in mats:
        n = len(mat)
        for i in range(n):
            for j in range(n):
                assert frac(mat[i][j]) == -frac(mat[j][i])

    sp = json.loads(parhiggs.sp_generate(2, 5, seed=4))
    first = sp["tuple"]["mats"][0]
    assert [[frac(x) for x in row] for row in first] == [[1, 0], [0, 1]]
