"""Tests for truncated series and completion-exactness certificates."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pba.lifting import (
    CmCertificate,
    PointSearchError,
    TruncatedSeries,
    cm_certificate,
    lift_at_origin,
    truncate,
    verify_certificate,
    verify_lift,
)
from pba.poly import Poly, X, Y, Z
from pba.triples import PolyVec, grad, verify_triple

coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=4)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, max_size=5).map(Poly)


def series(p: Poly, cap: int) -> TruncatedSeries:
    return truncate(p, cap)


def test_truncate_pins():
    s = truncate(X**3 + X + 1, 2)
    assert s.to_poly() == X + 1
    assert s.cap == 2
    assert s.coeff((1, 0, 0)) == 1
    assert s.coeff((3, 0, 0)) == 0
    assert truncate(Poly.zero(), 4).is_zero()


def test_series_arithmetic():
    a = series(X + Y, 3)
    b = series(X * Y, 3)
    assert (a + b).to_poly() == X + Y + X * Y
    assert (a - a).is_zero()
    assert (-a).to_poly() == -X - Y
    # products drop terms beyond the cap
    assert (a * b).to_poly() == X**2 * Y + X * Y**2
    c = series(X**2, 3)
    assert (b * c).is_zero()


def test_series_cap_mismatch():
    with pytest.raises(ValueError, match="cap mismatch"):
        series(X, 2) + series(Y, 3)
    with pytest.raises(ValueError, match="cap mismatch"):
        series(X, 2) * series(Y, 1)


def test_series_derivative():
    s = series(X**2 + Y * Z + 5, 2)
    d = s.derivative("x")
    assert d.cap == 1
    assert d.to_poly() == 2 * X
    assert series(Poly.constant(3), 0).derivative("z").cap == 0


def test_series_equality_and_hash():
    assert series(X, 2) == series(X, 2)
    assert series(X, 2) != series(X, 3)
    assert hash(series(X, 2)) == hash(series(X, 2))
    assert repr(series(X, 2)) == "TruncatedSeries('x', cap=2)"


@given(polys, polys, st.integers(0, 4))
@settings(max_examples=30)
def test_series_mul_matches_truncated_poly_mul(p, q, cap):
    a, b = series(p, cap), series(q, cap)
    assert a * b == truncate(p * q, cap)


@given(polys, polys, st.integers(0, 4))
@settings(max_examples=30)
def test_series_ring_axioms(p, q, cap):
    a, b = series(p, cap), series(q, cap)
    assert a + b == b + a
    assert a * b == b * a
    assert (a - a).is_zero()


def test_lift_requires_nonzero_constants():
    with pytest.raises(ValueError, match="weight"):
        lift_at_origin(PolyVec(Poly.one(), Poly.one(), Poly.one()), -1)
    with pytest.raises(ValueError, match="constant"):
        lift_at_origin(verify_triple(PolyVec(X, Y, Z)), 3)


def test_lift_reproduces_engineered_data():
    # F = b * grad(d) for polynomial b, d satisfying the conventions
    b0 = 1 + X
    d0 = X + Y + Z**2
    F = grad(d0).scale(b0)
    result = lift_at_origin(verify_triple(F), 5)
    assert result.weight == 5
    assert result.b == truncate(b0, 5)
    assert result.d == truncate(d0, 6)
    assert verify_lift(result, F)


def test_lift_conventions():
    F = grad(X + Y).scale(Poly.one() + Z)
    result = lift_at_origin(verify_triple(F), 3)
    conv = dict(result.conventions)
    assert conv[(0, 0, 0)] == 0
    assert conv[(1, 0, 0)] == 1
    assert conv[(2, 0, 0)] == 0
    assert conv[(3, 0, 0)] == 0
    assert conv[(4, 0, 0)] == 0
    assert verify_lift(result, F)


def test_verify_lift_detects_tampering():
    b0 = 1 + X
    d0 = X + Y + Z**2
    F = grad(d0).scale(b0)
    result = lift_at_origin(verify_triple(F), 4)
    from pba.lifting import LiftResult

    bad = LiftResult(result.b + series(Y.derivative("x") + Y, 4), result.d,
                     result.weight, result.conventions)
    assert not verify_lift(bad, F)


def test_lift_congruence_holds_for_scaled_gradient():
    # nonconstant multiplier, gradient with all three slots populated
    F = grad(X + Y + Z**2 / 2 + 1).scale(2 + X * Y)
    result = lift_at_origin(verify_triple(F), 4)
    assert verify_lift(result, F)


def test_immediate_certificate_g_slot():
    F = PolyVec(Poly.zero(), Z - 7, Poly.zero())
    cert = cm_certificate(F, 3)
    assert cert.cycles == 1
    assert cert.point == (0, 0, 0)
    assert verify_certificate(cert, F)


def test_immediate_certificate_h_slot():
    F = PolyVec(Poly.zero(), Poly.zero(), X**2 + 1)
    cert = cm_certificate(F, 4)
    assert cert.cycles == 2
    assert verify_certificate(cert, F)


def test_immediate_certificate_zero_triple():
    F = PolyVec(Poly.zero(), Poly.zero(), Poly.zero())
    cert = cm_certificate(F, 2)
    assert verify_certificate(cert, F)


def test_certificate_exact_triple():
    F = verify_triple(PolyVec(X, Y, Z))
    cert = cm_certificate(F, 4)
    assert cert.point == (-1, -1, -1)
    assert cert.cycles == 0
    assert cert.lift.weight == 4
    assert verify_certificate(cert, F)


def test_certificate_needs_candidate_point():
    with pytest.raises(PointSearchError):
        cm_certificate(PolyVec(X, Y, Z), 2, search_box=0)


def test_certificate_half_integer_points():
    # f*g = (x^3-x)^2 vanishes at every integer in the box, so the
    # search must move to half-integer coordinates
    b = X**3 - X
    F = grad(X + Y).scale(b)
    cert = cm_certificate(F, 3, search_box=1)
    assert any(c.denominator == 2 for c in cert.point)
    assert verify_certificate(cert, F)


def test_certificate_is_deterministic():
    F = PolyVec(X, Y, Z)
    a = cm_certificate(F, 3)
    b = cm_certificate(F, 3)
    assert a.point == b.point
    assert a.cycles == b.cycles
    assert a.lift.b == b.lift.b
    assert a.lift.d == b.lift.d
