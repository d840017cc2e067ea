"""The table of normalized rank-one ideals with small invariants, regenerated from scratch.

For every admissible ``(n_e, n_o)`` with both entries at most three, each
Castelnuovo polynomial of that weight contributes one row: its Hilbert
series through ``t^6``, every admissible Betti table, and the dimension of
the self-extension group.  ``data/appendix_table.json`` is an independent
transcription of the published table; :func:`check` compares the two byte
for byte after canonical serialization.
"""

from __future__ import annotations

import difflib
import json
from dataclasses import dataclass
from importlib import resources

from .betti import BettiTable, enumerate_for, ext1_graded_dim
from .castelnuovo import InvariantPair, enumerate_polys, in_N, to_hilbert

GOLDEN_RESOURCE = "appendix_table.json"
HILBERT_ORDER = 6
MAX_INVARIANT = 3


@dataclass(frozen=True)
class AppendixRow:
    invariants: InvariantPair
    castelnuovo: tuple[int, ...]
    hilbert: tuple[int, ...]
    resolutions: tuple[BettiTable, ...]
    ext1: int

    def to_json(self) -> dict:
        return {
            "castelnuovo": list(self.castelnuovo),
            "ext1": self.ext1,
            "hilbert": list(self.hilbert),
            "invariants": list(self.invariants),
            "resolutions": [t.to_json() for t in self.resolutions],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AppendixRow":
        return cls(
            InvariantPair(*obj["invariants"]),
            tuple(obj["castelnuovo"]),
            tuple(obj["hilbert"]),
            tuple(BettiTable.from_json(t) for t in obj["resolutions"]),
            int(obj["ext1"]),
        )


def regenerate(max_invariant: int = MAX_INVARIANT) -> list[AppendixRow]:
    rows = []
    pairs = sorted(
        (n_e, n_o)
        for n_e in range(max_invariant + 1)
        for n_o in range(max_invariant + 1)
        if in_N(n_e, n_o)
    )
    for n_e, n_o in pairs:
        for s in sorted(enumerate_polys(n_e, n_o), key=lambda s: s.coeffs, reverse=True):
            q = s.char_poly()
            tables = enumerate_for(q)
            long_h = to_hilbert(s, max(q.max_degree, HILBERT_ORDER))
            ext = {ext1_graded_dim(t, long_h) for t in tables}
            if len(ext) != 1:
                raise AssertionError(f"resolutions of {s} disagree on Ext^1: {ext}")
            rows.append(
                AppendixRow(
                    InvariantPair(n_e, n_o),
                    s.coeffs,
                    to_hilbert(s, HILBERT_ORDER).coeffs,
                    tuple(tables),
                    ext.pop(),
                )
            )
    return rows


def dumps(rows: list[AppendixRow]) -> str:
    """One row per line, keys sorted."""
    return "[\n" + ",\n".join(json.dumps(r.to_json(), sort_keys=True) for r in rows) + "\n]\n"


def load_golden() -> list[AppendixRow]:
    return [AppendixRow.from_json(r) for r in json.loads(golden_text())]


def golden_text() -> str:
    return resources.files("qhilb.data").joinpath(GOLDEN_RESOURCE).read_text(encoding="utf-8")


def check() -> tuple[bool, str]:
    """Compare regenerated rows with the transcription; returns ``(ok, unified diff)``."""
    expected = golden_text()
    actual = dumps(regenerate())
    if expected == actual:
        return True, ""
    diff = difflib.unified_diff(
        expected.splitlines(keepends=True),
        actual.splitlines(keepends=True),
        fromfile="transcribed",
        tofile="regenerated",
    )
    return False, "".join(diff)
