"""Versioned JSON rendering of spectrum reports.

Documents carry a top-level "schema": "pba/1" marker. Polynomials are
serialized as their canonical render strings and rationals as exact
strings like "9/2", so a document parses back through the expression
grammar without loss. dumps() fixes key order and indentation, making
load-then-dump byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .poly import Poly
from .spectrum import PointClass, SpectrumReport

SCHEMA = "pba/1"


def _rat(q: Fraction) -> str:
    return str(q)


def _point(p) -> list[str]:
    return [_rat(c) for c in p]


def _point_class(pc: PointClass) -> dict:
    return {
        "point": _point(pc.point),
        "kind": pc.kind.value,
        "parameter": str(pc.parameter) if pc.parameter is not None else None,
    }


def report_payload(s: Poly, t: Poly, max_deg: int, report: SpectrumReport) -> dict:
    """Plain-data form of a report, ready for json.dumps."""
    stratum = report.residually_null
    return {
        "schema": SCHEMA,
        "s": str(s),
        "t": str(t),
        "max_deg": max_deg,
        "zero_ideal": report.zero_ideal,
        "residually_null": {
            "basis": [str(b) for b in stratum.basis.basis],
            "dimension": stratum.dimension,
            "points": [_point_class(pc) for pc in stratum.points],
            "eliminants": [str(e) for e in stratum.eliminants],
            "points_complete": stratum.points_complete,
        },
        "height_one": {
            str(param): [
                {
                    "generator": str(r.generator),
                    "multiplicity": r.multiplicity,
                    "primitive": r.primitive,
                    "absolutely_irreducible_certified": r.absolutely_irreducible_certified,
                }
                for r in primes
            ]
            for param, primes in report.height_one.items()
        },
        "flags": {
            "factorization_complete": report.flags.factorization_complete,
            "finitely_many_poisson_maximal": report.flags.finitely_many_poisson_maximal,
        },
    }


def dumps(payload: dict) -> str:
    """Canonical serialization: sorted keys, two-space indent, trailing
    newline. Loading and re-dumping a document reproduces it exactly."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
