"""Regression corpus: named spectra with expected classifications.

Each entry names a bracket (s, t), sampled pencil parameters, and the
expected residually-null dimension, maximal points, and per-parameter
factor data. run_corpus computes fresh reports and diffs them against
the expectations; entries run concurrently and results come back sorted
by name. A bundled corpus covering the worked examples ships with the
package.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .parser import parse
from .spectrum import PencilParameter, spectrum_report


def _fmt_points(pts) -> list[tuple[str, ...]]:
    return sorted(tuple(str(c) for c in p) for p in pts)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    s: str
    t: str
    params: tuple[PencilParameter, ...]
    max_deg: int
    expected: dict


@dataclass(frozen=True)
class CorpusResult:
    name: str
    passed: bool
    diffs: tuple[str, ...]


def bundled_corpus_text() -> str:
    return resources.files("pba").joinpath("data/corpus.json").read_text()


def load_corpus(text: str) -> list[CorpusEntry]:
    """Parse a corpus document; raises ValueError on malformed entries."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"corpus is not valid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise ValueError("corpus must be a JSON array of entries")
    entries = []
    for item in raw:
        try:
            parse(item["s"])
            parse(item["t"])
            entries.append(
                CorpusEntry(
                    name=item["name"],
                    s=item["s"],
                    t=item["t"],
                    params=tuple(PencilParameter.parse(q) for q in item["params"]),
                    max_deg=int(item.get("max_deg", 3)),
                    expected=dict(item["expected"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            name = item.get("name", "?") if isinstance(item, dict) else "?"
            raise ValueError(f"bad corpus entry {name!r}: {exc}") from None
    return entries


def _check_entry(entry: CorpusEntry) -> CorpusResult:
    diffs: list[str] = []
    s = parse(entry.s)
    t = parse(entry.t)
    report = spectrum_report(s, t, list(entry.params), entry.max_deg)
    stratum = report.residually_null

    want_dim = entry.expected.get("residually_null_dimension")
    if want_dim is not None and stratum.dimension != want_dim:
        diffs.append(f"residually_null_dimension: expected {want_dim}, got {stratum.dimension}")

    want_points = entry.expected.get("maximal_points")
    if want_points is not None:
        expected_pts = {tuple(Fraction(c) for c in p) for p in want_points}
        got_pts = {pc.point for pc in stratum.points}
        if expected_pts != got_pts:
            diffs.append(
                f"maximal_points: expected {_fmt_points(expected_pts)}, got {_fmt_points(got_pts)}"
            )

    for param_text, want_rows in entry.expected.get("height_one", {}).items():
        param = PencilParameter.parse(param_text)
        got_rows = report.height_one.get(param)
        if got_rows is None:
            diffs.append(f"height_one[{param}]: parameter missing from report")
            continue
        want = sorted(
            (str(parse(r["generator"])), int(r["multiplicity"]), bool(r["primitive"]))
            for r in want_rows
        )
        got = sorted((str(r.generator), r.multiplicity, r.primitive) for r in got_rows)
        if want != got:
            diffs.append(f"height_one[{param}]: expected {want}, got {got}")

    return CorpusResult(entry.name, not diffs, tuple(diffs))


def run_corpus(entries: list[CorpusEntry]) -> list[CorpusResult]:
    """Evaluate all entries concurrently; results sorted by entry name."""
    if not entries:
        return []
    with ThreadPoolExecutor(max_workers=min(8, len(entries))) as pool:
        results = list(pool.map(_check_entry, entries))
    return sorted(results, key=lambda r: r.name)
