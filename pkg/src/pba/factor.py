"""Bounded factorization over Q by undetermined coefficients.

After monomial extraction and squarefree decomposition, candidate factors
of each squarefree part are searched degree by degree: a monic ansatz
factor with unknown coefficients is divided into the target, and the
vanishing of the remainder is a polynomial system in the unknowns, solved
with the generic Gröbner engine (one ring variable per unknown).

Searching degrees up to floor(deg/2) finds a factor whenever one exists;
the result is only marked complete when the requested bound reaches
ceil(deg/2) for every remaining cofactor. The same systems decide
absolute irreducibility exactly: a unit ansatz ideal at every degree
means no factor exists over any field extension, while a proper ideal
with no rational point (e.g. x^2 - 2) leaves the factor irreducible over
Q but not certified absolutely irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _engine
from .poly import Monomial, Poly, exact_quotient, grlex_key, squarefree_decomposition

_ONE = Fraction(1)


@dataclass(frozen=True)
class FactorPart:
    factor: Poly
    multiplicity: int
    absolutely_irreducible_certified: bool


@dataclass(frozen=True)
class Factorization:
    """p = unit * product(factor^multiplicity); complete is False when the
    degree bound could not certify irreducibility of some part."""

    unit: Fraction
    parts: tuple[FactorPart, ...]
    complete: bool


def _monomials_upto(d: int) -> list[Monomial]:
    out = []
    for total in range(d + 1):
        for i in range(total, -1, -1):
            for j in range(total - i, -1, -1):
                out.append((i, j, total - i - j))
    return out


def _division_system(q: Poly, lm3: Monomial, unknowns: list[Monomial]) -> list[_engine.Epoly]:
    """Remainder of q under division by the symbolic monic factor
    lm3 + sum c_i * unknowns[i], grouped into one polynomial in the c's
    per leftover x,y,z monomial."""
    n = len(unknowns)
    pad = (0,) * n
    unit = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    uterms = [(lm3, pad)] + [(unknowns[i], unit[i]) for i in range(n)]
    work: dict[tuple, Fraction] = {tm + pad: c for tm, c in q.items()}
    while True:
        divisible = [mm for mm in {k[:3] for k in work} if _engine.mono_divides(lm3, mm)]
        if not divisible:
            break
        big = max(divisible, key=grlex_key)
        shift = _engine.mono_sub(big, lm3)
        coef = [(k[3:], c) for k, c in work.items() if k[:3] == big]
        for ce, cc in coef:
            for um3, umc in uterms:
                key = _engine.mono_add(um3, shift) + _engine.mono_add(umc, ce)
                v = work.get(key, Fraction(0)) - cc
                if v:
                    work[key] = v
                else:
                    work.pop(key, None)
    grouped: dict[Monomial, _engine.Epoly] = {}
    for k, c in work.items():
        grouped.setdefault(k[:3], {})[k[3:]] = c
    return list(grouped.values())


def _ansatz_search(q: Poly, d: int) -> tuple[Poly | None, bool]:
    """Look for a monic degree-d factor of squarefree q.

    Returns (factor or None, proper_ideal_seen): the second flag is True
    when some candidate system had solutions over an extension field even
    though no rational factor was found.
    """
    proper_seen = False
    qlm = q.leading_monomial()
    candidates = [m for m in _monomials_upto(d) if sum(m) == d and _engine.mono_divides(m, qlm)]
    candidates.sort(key=grlex_key, reverse=True)
    for m in candidates:
        unknowns = [mm for mm in _monomials_upto(d) if grlex_key(mm) < grlex_key(m)]
        unknowns.sort(key=grlex_key, reverse=True)
        system = _division_system(q, m, unknowns)
        if not system:
            return Poly.term(1, m), proper_seen
        basis = _engine.buchberger(system, _engine.lex_key)
        if _engine.is_unit(basis, _engine.lex_key):
            continue
        points, _, _ = _engine.solve_rational(system, len(unknowns))
        if points:
            sol = points[0]
            terms = {m: _ONE}
            for i, mm in enumerate(unknowns):
                if sol[i]:
                    terms[mm] = sol[i]
            return Poly(terms), proper_seen
        proper_seen = True
    return None, proper_seen


def _certify_absolutely_irreducible(u: Poly, bound: int) -> bool:
    """True iff u provably has no factor over any field extension: the
    ansatz ideal is the unit ideal at every degree up to floor(deg/2)."""
    deg = u.total_degree()
    if deg <= 1:
        return True
    if bound < deg // 2:
        return False
    for d in range(1, deg // 2 + 1):
        _, proper = _ansatz_search_unit_only(u, d)
        if proper:
            return False
    return True


def _ansatz_search_unit_only(q: Poly, d: int) -> tuple[None, bool]:
    qlm = q.leading_monomial()
    candidates = [m for m in _monomials_upto(d) if sum(m) == d and _engine.mono_divides(m, qlm)]
    for m in sorted(candidates, key=grlex_key, reverse=True):
        unknowns = [mm for mm in _monomials_upto(d) if grlex_key(mm) < grlex_key(m)]
        system = _division_system(q, m, unknowns)
        if not system:
            return None, True
        basis = _engine.buchberger(system, _engine.lex_key)
        if not _engine.is_unit(basis, _engine.lex_key):
            return None, True
    return None, False


def _factor_squarefree(q: Poly, bound: int) -> tuple[list[tuple[Poly, bool]], bool]:
    """Split monic squarefree q into irreducibles over Q within the degree
    bound; returns (factors with absolute-irreducibility flags, complete)."""
    deg = q.total_degree()
    if deg == 1:
        return [(q, True)], True
    seen_proper = False
    for d in range(1, min(bound, deg // 2) + 1):
        u, proper = _ansatz_search(q, d)
        seen_proper = seen_proper or proper
        if u is not None:
            cof = exact_quotient(q, u)
            assert cof is not None
            head = [(u, _certify_absolutely_irreducible(u, bound))]
            tail, complete = _factor_squarefree(cof.monic(), bound)
            return head + tail, complete
    if bound >= (deg + 1) // 2:
        # searched everything a factorization would need: irreducible over Q
        return [(q, not seen_proper)], True
    return [(q, False)], False


def factor_bounded(p: Poly, max_total_degree: int) -> Factorization:
    """Factor p into irreducibles over Q, searching factor degrees up to
    max_total_degree; monomial and squarefree structure is always exact."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if max_total_degree < 0:
        raise ValueError("negative degree bound")
    monomials = [m for m, _ in p.items()]
    mins = [min(m[vi] for m in monomials) for vi in range(3)]
    parts: list[FactorPart] = []
    shifted = p
    if any(mins):
        shifted = Poly._make({(m[0] - mins[0], m[1] - mins[1], m[2] - mins[2]): c for m, c in p.items()})
        for vi, a in enumerate(mins):
            if a:
                parts.append(FactorPart(Poly.variable(vi), a, True))
    unit, squarefree = squarefree_decomposition(shifted)
    complete = True
    for sq in squarefree:
        pieces, piece_complete = _factor_squarefree(sq.factor, max_total_degree)
        complete = complete and piece_complete
        for fac, certified in pieces:
            parts.append(FactorPart(fac, sq.multiplicity, certified))
    return Factorization(unit, tuple(parts), complete)
