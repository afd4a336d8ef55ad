import json
import math

import pytest

import fracalc


def test_gamma_values():
    assert fracalc.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert fracalc.gamma(5.0) == pytest.approx(24.0, rel=1e-13)


def test_eigen_relation():
    f = fracalc.make_one_sided_exp(1.0, 0.005, 40.0)
    w = fracalc.weyl(f, 0.5)
    d = fracalc.marchaud_right(f, 0.5)
    # exp(-x) is fixed by the order-1/2 integral and derivative at rate 1
    for x in (0.3, 1.0, 2.5):
        assert w(x) == pytest.approx(math.exp(-x), abs=1e-7)
        assert d(x) == pytest.approx(math.exp(-x), abs=1e-5)


def test_two_sided_matches_spectral():
    f = fracalc.make_gaussian(0.0, 1.0, 0.02, 20.0)
    phys = fracalc.two_sided(fracalc.OperatorKind.KAlphaH, f, 0.5)
    spec = fracalc.apply_symbol(f, fracalc.OperatorKind.KAlphaH, 0.5)
    gaps = [abs(a - b) for a, b in zip(phys.values(), spec.values())]
    assert max(gaps) < 1e-4


def test_extension_closed_form():
    f = fracalc.make_one_sided_exp(1.0, 0.005, 40.0)
    assert fracalc.extension_value(f, 0.5, 1.0, 0.5) == pytest.approx(
        math.exp(-1.5), abs=1e-8
    )
    h = fracalc.multiplier_h(0.5, 1.0, 1.0)
    ref = complex(0.37485280862038234, 0.32031563543421548)
    assert abs(h - ref) < 1e-9


def test_kernel_mass():
    for alpha in (0.25, 0.5, 0.75):
        assert fracalc.kernel_mass(alpha) == pytest.approx(1.0, abs=1e-9)


def test_grid_function_roundtrip():
    values = [math.cos(0.1 * i) for i in range(41)]
    f = fracalc.GridFunction(
        0.0,
        0.1,
        values,
        fracalc.TailModel.zero(4.0),
        fracalc.TailModel.zero(0.0),
    )
    assert len(f) == 41
    assert f(1.0) == pytest.approx(math.cos(1.0), abs=1e-8)
    assert f(10.0) == 0.0


def test_verify_suite_json():
    report = json.loads(fracalc.run_suite("gamma"))
    assert report["schema"] == 1
    assert report["all_pass"] is True
    assert len(report["checks"]) >= 5
