import cmath
import json
import math

import pytest

import innerfn


def test_catalog():
    names = innerfn.catalog_names()
    assert "log_sine" in names
    sq = innerfn.catalog_get("square_wave")
    assert sq(math.pi / 2) == 1.0
    assert sq(0.0) == 0.0
    assert innerfn.eval_real("log_sine", math.pi) == pytest.approx(-math.log(2.0), abs=1e-15)
    with pytest.raises(KeyError):
        innerfn.catalog_get("nope")
    with pytest.raises(ValueError):
        innerfn.eval_real("log_sine", 0.0)


def test_sawtooth_coefficients():
    fc = innerfn.compute_coefficients("sawtooth", 8)
    assert fc.N == 8
    for k in range(1, 9):
        assert fc.beta[k] == pytest.approx(2.0 * (-1) ** (k + 1) / k, abs=1e-12)
    assert not innerfn.verify_bounds(fc).violation


def test_evaluate_against_closed_form():
    tc = innerfn.from_fourier(innerfn.compute_coefficients("sawtooth", 200))
    z = cmath.rect(0.9, 1.0)
    assert abs(innerfn.evaluate(tc, 0.9, 1.0) - (-2j * cmath.log(1 + z))) < 1e-8
    assert abs(innerfn.closed_form_eval("sawtooth_w", 0.9, 1.0) - (-2j * cmath.log(1 + z))) < 1e-14
    w = innerfn.evaluate(tc, 0.5, -0.3)
    assert abs(innerfn.evaluate(innerfn.conjugate(tc), 0.5, -0.3) - (-1j) * w) < 1e-14
    with pytest.raises(ValueError):
        innerfn.evaluate(tc, 1.0, 0.0)


def test_chain_round_trip():
    tc = innerfn.TaylorCoefficients([0, 1, 0.5j, -0.25])
    back = innerfn.angular_primitive(innerfn.angular_derivative(tc))
    assert max(abs(a - b) for a, b in zip(back.c, tc.c)) < 1e-15
    pos = innerfn.ChainPosition(tc)
    assert innerfn.navigate(pos, 2).is_proper()
    with pytest.raises(IndexError):
        innerfn.navigate(pos, 9)
    combo = 2 * tc - tc
    assert list(combo.c) == list(tc.c)


def test_recovery():
    fc = innerfn.compute_coefficients("square_wave", 1 << 15)
    tc = innerfn.from_fourier(fc)
    r = innerfn.radial_recover(tc, 0.0)
    assert all(e.u == 0.0 for e in r.estimates)
    a = innerfn.abel_sum(fc, 1.0, innerfn.RhoLadder([0.5, 0.9], innerfn.Extrapolation.none))
    b = innerfn.radial_recover(tc, 1.0, innerfn.RhoLadder([0.5, 0.9], innerfn.Extrapolation.none))
    assert abs(a.estimates[1].u - b.estimates[1].u) < 1e-12
    g = innerfn.grid_error("square_wave", tc, 1 - 1e-3, 4096, 0.05)
    assert g.l1 <= 1e-2


def test_classify_fixtures():
    n = 1 << 20
    ones = innerfn.TaylorCoefficients([0] + [1] * n)
    report = innerfn.classify_point(ones, 0.0)
    assert report.verdict == innerfn.Verdict.hard
    assert report.degree == 1
    with pytest.raises(RuntimeError):
        innerfn.probe_point(innerfn.TaylorCoefficients([0, 1, 1, 1]), 0.0)


def test_json_round_trip():
    fc = innerfn.compute_coefficients("log_sine", 16)
    text = innerfn.to_json(fc)
    data = json.loads(text)
    assert data["N"] == 16
    tc = innerfn.taylor_from_json(text)
    assert list(tc.c) == list(innerfn.from_fourier(fc).c)


def test_piecewise_input():
    spec = innerfn.make_piecewise("line", [(-math.pi, math.pi, [0.0, 1.0])], parity=innerfn.Parity.odd)
    fc = innerfn.compute_coefficients(spec, 4)
    assert fc.beta[1] == pytest.approx(2.0, abs=1e-12)
    with pytest.raises(ValueError):
        innerfn.QuadConfig(abs_tol=0.0)


def test_quadrature_error_carries_worst_k():
    spec = innerfn.make_piecewise("steep", [(-math.pi, math.pi, [0.0] * 60 + [1.0])])
    with pytest.raises(innerfn.QuadratureError) as info:
        innerfn.compute_coefficients(spec, 8, innerfn.QuadConfig(max_panels=2))
    assert 0 <= info.value.worst_k <= 8
    assert info.value.achieved_error > 0
