"""Truncated power-series lifting of Poisson triples.

Any verified triple F = (f, g, h) with f and g nonzero at a point can be
written there as b * grad(d) for formal power series b, d. The lift is
computed coefficient by coefficient from the three component equations

    b * d_x = f,    b * d_y = g,    b * d_z = h,

sweeping total degree (weight) upward. The free choices are pinned to
d_000 = 0, d_100 = 1 and d_(w+1)00 = 0 at each weight, which makes the
output deterministic; they are recorded on the result. Triples vanishing
at every candidate point first get moved: cm_certificate cycles the
variables so two nonzero components occupy the f and g slots, hunts a
base point with f*g != 0, translates there, and lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping, Union

from .poly import Monomial, Poly, ScalarLike
from .triples import PolyVec, PoissonTriple, _as_vec, cycle_variables, ensure_verified, verify_triple

_ZERO = Fraction(0)
_ONE = Fraction(1)
_ORIGIN = (0, 0, 0)


class PointSearchError(RuntimeError):
    """No base point with f*g nonzero was found inside the search box."""


class TruncatedSeries:
    """Polynomial data truncated at a total-degree cap.

    Represents an element of the power-series completion at the origin
    modulo terms of degree > cap. Binary operations insist on matching
    caps; products drop everything the cap cannot see.
    """

    __slots__ = ("_terms", "_cap")

    def __init__(self, terms: Mapping[Monomial, ScalarLike], cap: int):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        data: dict[Monomial, Fraction] = {}
        for mono, c in terms.items():
            m = tuple(mono)
            if len(m) != 3 or any(e < 0 or not isinstance(e, int) for e in m):
                raise ValueError(f"bad monomial {mono!r}")
            if sum(m) > cap:
                continue
            v = data.get(m, _ZERO) + Fraction(c)
            if v:
                data[m] = v
            else:
                data.pop(m, None)
        self._terms = data
        self._cap = cap

    @classmethod
    def _make(cls, data: dict[Monomial, Fraction], cap: int) -> "TruncatedSeries":
        s = cls.__new__(cls)
        s._terms = data
        s._cap = cap
        return s

    @property
    def cap(self) -> int:
        return self._cap

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def to_poly(self) -> Poly:
        return Poly._make(dict(self._terms))

    def _check_cap(self, other: "TruncatedSeries") -> None:
        if self._cap != other._cap:
            raise ValueError(f"cap mismatch: {self._cap} vs {other._cap}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_cap(other)
        data = dict(self._terms)
        for m, c in other._terms.items():
            v = data.get(m, _ZERO) + c
            if v:
                data[m] = v
            else:
                data.pop(m, None)
        return TruncatedSeries._make(data, self._cap)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._make({m: -c for m, c in self._terms.items()}, self._cap)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_cap(other)
        cap = self._cap
        data: dict[Monomial, Fraction] = {}
        for (a0, a1, a2), ca in self._terms.items():
            if a0 + a1 + a2 > cap:
                continue
            for (b0, b1, b2), cb in other._terms.items():
                m = (a0 + b0, a1 + b1, a2 + b2)
                if sum(m) > cap:
                    continue
                v = data.get(m, _ZERO) + ca * cb
                if v:
                    data[m] = v
                else:
                    data.pop(m, None)
        return TruncatedSeries._make(data, cap)

    def derivative(self, var: Union[str, int]) -> "TruncatedSeries":
        """Partial derivative; the cap drops by one because the top slice
        of the input says nothing about higher terms of the derivative."""
        dp = self.to_poly().derivative(var)
        cap = max(self._cap - 1, 0)
        return TruncatedSeries._make({m: c for m, c in dp.items() if sum(m) <= cap}, cap)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._cap == other._cap and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._cap, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return str(self.to_poly())

    def __repr__(self) -> str:
        return f"TruncatedSeries({str(self.to_poly())!r}, cap={self._cap})"


def truncate(p: Poly, cap: int) -> TruncatedSeries:
    """View a polynomial in the completion, chopped at total degree cap."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    return TruncatedSeries._make({m: c for m, c in p.items() if sum(m) <= cap}, cap)


@dataclass(frozen=True)
class LiftResult:
    """A pair b, d with b * grad(d) congruent to the lifted triple through
    total degree `weight`; b is capped at weight, d at weight + 1.

    `conventions` records the free coefficient choices that make the lift
    unique: ((i,j,k), value) pairs for d_000, d_100 and each d_(w+1)00.
    """

    b: TruncatedSeries
    d: TruncatedSeries
    weight: int
    conventions: tuple[tuple[Monomial, Fraction], ...]


@dataclass(frozen=True)
class CmCertificate:
    """Witness that a triple is completion-exact: after `cycles` variable
    cycles and translation by `point`, the lift congruence holds."""

    point: tuple[Fraction, Fraction, Fraction]
    cycles: int
    lift: LiftResult


def lift_at_origin(F, weight: int) -> LiftResult:
    """Solve b*d_x = f, b*d_y = g, b*d_z = h coefficientwise through the
    given weight. Requires a verified triple with f(0) != 0 and g(0) != 0."""
    T = ensure_verified(F)
    if weight < 0:
        raise ValueError("weight must be non-negative")
    fc = dict(T.f.items())
    gc = dict(T.g.items())
    hc = dict(T.h.items())
    f0 = fc.get(_ORIGIN, _ZERO)
    g0 = gc.get(_ORIGIN, _ZERO)
    if not f0 or not g0:
        raise ValueError("lift needs nonzero constant terms in f and g")

    b: dict[Monomial, Fraction] = {_ORIGIN: f0}
    d: dict[Monomial, Fraction] = {
        _ORIGIN: _ZERO,
        (1, 0, 0): _ONE,
        (0, 1, 0): g0 / f0,
        (0, 0, 1): hc.get(_ORIGIN, _ZERO) / f0,
    }
    conventions = [(_ORIGIN, _ZERO), ((1, 0, 0), _ONE)]

    for w in range(1, weight + 1):
        d[(w + 1, 0, 0)] = _ZERO
        conventions.append(((w + 1, 0, 0), _ZERO))
        for i in range(w, -1, -1):
            rem = w - i
            for j in range(rem, -1, -1):
                k = rem - j
                # b_ijk from the x-equation at (i,j,k); its own term has
                # factor d_100 = 1
                acc = _ZERO
                for r in range(1, i + 2):
                    for s in range(j + 1):
                        for t in range(k + 1):
                            if (r, s, t) == (1, 0, 0):
                                continue
                            bi = (i - r + 1, j - s, k - t)
                            assert bi in b and (r, s, t) in d
                            acc += r * b[bi] * d[(r, s, t)]
                b[(i, j, k)] = fc.get((i, j, k), _ZERO) - acc
            j = rem
            # d_i(j+1)0 from the y-equation at (i,j,0); pivot (j+1)*b_000
            acc = _ZERO
            for r in range(i + 1):
                for s in range(1, j + 2):
                    if (r, s) == (i, j + 1):
                        continue
                    bi = (i - r, j - s + 1, 0)
                    assert bi in b and (r, s, 0) in d
                    acc += s * b[bi] * d[(r, s, 0)]
            d[(i, j + 1, 0)] = (gc.get((i, j, 0), _ZERO) - acc) / ((j + 1) * f0)
            for k in range(rem + 1):
                j = rem - k
                # d_ij(k+1) from the z-equation at (i,j,k); pivot (k+1)*b_000
                acc = _ZERO
                for r in range(i + 1):
                    for s in range(j + 1):
                        for t in range(1, k + 2):
                            if (r, s, t) == (i, j, k + 1):
                                continue
                            bi = (i - r, j - s, k - t + 1)
                            assert bi in b and (r, s, t) in d
                            acc += t * b[bi] * d[(r, s, t)]
                d[(i, j, k + 1)] = (hc.get((i, j, k), _ZERO) - acc) / ((k + 1) * f0)

    bs = TruncatedSeries._make({m: c for m, c in b.items() if c}, weight)
    ds = TruncatedSeries._make({m: c for m, c in d.items() if c}, weight + 1)
    return LiftResult(b=bs, d=ds, weight=weight, conventions=tuple(conventions))


def verify_lift(result: LiftResult, F) -> bool:
    """Does b * grad(d) agree with F in every coefficient of total degree
    <= weight? This is the congruence the lift promises."""
    vec = _as_vec(F)
    w = result.weight
    for var, comp in zip((0, 1, 2), (vec.f, vec.g, vec.h)):
        lhs = result.b * result.d.derivative(var)
        if not (lhs - truncate(comp, w)).is_zero():
            return False
    return True


def _base_points(box: int) -> Iterator[tuple[Fraction, Fraction, Fraction]]:
    """Integer points by increasing max-norm, then half-integer points."""
    for n in range(box + 1):
        for p in product(range(-n, n + 1), repeat=3):
            if max(abs(c) for c in p) == n:
                yield tuple(Fraction(c) for c in p)
    for n in range(1, 2 * box + 1):
        for p in product(range(-n, n + 1), repeat=3):
            if max(abs(c) for c in p) == n and any(c % 2 for c in p):
                yield tuple(Fraction(c, 2) for c in p)


def cm_certificate(F, weight: int, search_box: int = 4) -> CmCertificate:
    """Exhibit F as completion-exact at some rational point.

    With at most one nonzero component the certificate is immediate:
    cycling moves that component into the f slot and (b, d) = (f, x)
    works exactly. Otherwise two nonzero components are cycled into the
    f and g slots, a base point with f*g != 0 is searched inside
    [-search_box, search_box]^3, and the translated triple is lifted.
    """
    T = ensure_verified(F)
    nonzero = [not c.is_zero() for c in T.vec]
    if sum(nonzero) <= 1:
        if nonzero[1]:
            cycles = 1
        elif nonzero[2]:
            cycles = 2
        else:
            cycles = 0
        G = T
        for _ in range(cycles):
            G = cycle_variables(G)
        conventions = [(_ORIGIN, _ZERO), ((1, 0, 0), _ONE)]
        conventions += [((w + 1, 0, 0), _ZERO) for w in range(1, weight + 1)]
        lift = LiftResult(
            b=truncate(G.f, weight),
            d=truncate(Poly.variable(0), weight + 1),
            weight=weight,
            conventions=tuple(conventions),
        )
        return CmCertificate(point=(_ZERO, _ZERO, _ZERO), cycles=cycles, lift=lift)

    if nonzero[0] and nonzero[1]:
        cycles = 0
    elif nonzero[1] and nonzero[2]:
        cycles = 1
    else:
        cycles = 2
    G = T
    for _ in range(cycles):
        G = cycle_variables(G)

    prod_fg = G.f * G.g
    for p in _base_points(search_box):
        if prod_fg.evaluate(p):
            point = p
            break
    else:
        raise PointSearchError(
            f"no point with f*g != 0 found in [-{search_box}, {search_box}]^3"
        )

    moved = verify_triple(PolyVec(*(c.translate(point) for c in G.vec)))
    lift = lift_at_origin(moved, weight)
    return CmCertificate(point=point, cycles=cycles, lift=lift)


def verify_certificate(cert: CmCertificate, F) -> bool:
    """Replay the certificate: cycle, translate, and check the congruence."""
    G = ensure_verified(F)
    for _ in range(cert.cycles):
        G = cycle_variables(G)
    moved = PolyVec(*(c.translate(cert.point) for c in G.vec))
    return verify_lift(cert.lift, moved)
