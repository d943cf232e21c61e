import math

import numpy as np
import pytest

import harmonia as hm


def test_polynomial_round_trip():
    f = hm.Polynomial(3, 2, {(2, 0, 0): 1.0, (0, 1, 1): -2.0})
    assert f.degree == 2 and f.n == 3
    assert f(np.array([1.0, 2.0, 3.0])) == pytest.approx(1.0 - 12.0)
    assert hm.Polynomial.from_json(f.to_json()) == f
    assert (f * 2.0).terms[(0, 1, 1)] == -4.0


def test_cubature_is_exact():
    rule = hm.product_cubature(3, 4)
    assert len(rule) == 2 * 5 * 5
    assert rule.nodes.shape == (50, 3)
    assert np.allclose(np.linalg.norm(rule.nodes, axis=1), 1.0)
    assert rule.weights.sum() == pytest.approx(4 * math.pi)
    assert hm.verify_exactness(rule, 8) < 1e-12


def test_harmonic_decomposition_reconstructs():
    m = hm.motzkin()
    e = hm.harmonic_decompose(m)
    assert e.k == 3 and len(e.components) == 4
    for c in e.components[1:]:
        assert hm.laplacian(c).is_zero() or max(abs(v) for v in hm.laplacian(c).terms.values()) < 1e-10
    diff = hm.reconstruct(e) - m
    assert all(abs(v) < 1e-12 for v in diff.terms.values())


def test_kernels():
    h = hm.power_kernel(3, 1)
    assert h.lambdas[0] == 1.0
    assert h.lambdas[1] == pytest.approx(0.4, abs=1e-12)
    ff = hm.fang_fawzi_kernel(3, 2, 6)
    assert ff.rho == pytest.approx(2 - 2 * ff.eigenvalue, abs=1e-9)
    with pytest.raises(hm.SingularKernelError):
        hm.fang_fawzi_kernel(3, 3, 2)


def test_bounds_bracket_the_minimum():
    m = hm.motzkin()
    h = hm.power_kernel(3, 10)
    rule = hm.product_cubature(3, 13)
    lo = hm.lower_bound(m, h, rule)
    hi = hm.upper_bound(m, rule)
    assert lo <= 0.0 <= hi


def test_sweep():
    report = hm.sweep(hm.motzkin(), hm.KernelKind.power, 2, 6)
    assert len(report.levels) == 5
    assert not report.ok() and report.errors[0].s == 2
    assert math.isinf(report.levels[0].tau)
    shared = hm.sweep(hm.builtin("motzkin"), hm.KernelKind.fangfawzi, 6, 12, shared_rule=True)
    lowers = [level.lower for level in shared.levels]
    assert all(b >= a - 1e-9 for a, b in zip(lowers, lowers[1:]))


def test_errors_are_typed():
    with pytest.raises(hm.DegreeError):
        hm.harmonic_decompose(hm.Polynomial(3, 3, {(3, 0, 0): 1.0}))
    assert issubclass(hm.SingularKernelError, hm.Error)
