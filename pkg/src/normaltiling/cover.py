"""Synthetic ring-by-ring growth of the universal cover.

Starting from an origin of degree ``k``, each ring is produced from the
previous one without reference to any geometry: every ring edge gets a
triangle whose apex is a new regular vertex, and each ring vertex ``v``
additionally sprouts ``index(v) + [v is generating]`` new generating
vertices between its two triangles. New vertices are never identified with
one another, so the counts are those of the cover itself.

Defects are addressed by ``(ring, slot)``; slot 0 is the first vertex
emitted for that ring (the regular vertex on the edge closing the cycle).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import kernels
from .dual import GrowthSequences
from .errors import DefectsUnbounded, InvalidDegree, NegativeIndex, SlotOutOfRange

REGULAR, GENERATING = "regular", "generating"


@dataclass(frozen=True)
class RingVertex:
    label: str
    index: int
    slot: int


@dataclass(eq=False)
class CoverState:
    base_degree: int
    defects: dict[tuple[int, int], int]
    generating: list[np.ndarray]  # per ring, uint8 flags; ring 0 is the origin
    indices: list[np.ndarray]
    sequences: GrowthSequences

    @property
    def i_max(self) -> int:
        return len(self.generating) - 1

    def ring(self, i: int) -> list[RingVertex]:
        if i == 0:
            raise ValueError("ring 0 is the origin, not a cycle")
        return [RingVertex(GENERATING if g else REGULAR, int(ix), s)
                for s, (g, ix) in enumerate(zip(self.generating[i], self.indices[i]))]

    @property
    def total_index(self) -> int:
        return (self.base_degree - 6) + sum(self.defects.values())

    @property
    def last_defect_ring(self) -> int:
        return max((r for r, _ in self.defects), default=0)


def simulate_cover(k: int, defects: Mapping[tuple[int, int], int] | None = None,
                   i_max: int = 10) -> CoverState:
    """Grow rings ``1..i_max`` around an origin of degree ``k``."""
    if k < 3:
        raise InvalidDegree(f"base degree must be >= 3, got {k}")
    if i_max < 0:
        raise ValueError("i_max must be >= 0")
    defects = {(int(r), int(s)): int(ix) for (r, s), ix in (defects or {}).items()}
    by_ring: dict[int, list[tuple[int, int]]] = {}
    for (r, s), ix in defects.items():
        if ix < 0:
            raise NegativeIndex(f"defect at ring {r}, slot {s} has index {ix}")
        if r < 1 or r > i_max:
            raise SlotOutOfRange(f"ring {r} is outside 1..{i_max}")
        by_ring.setdefault(r, []).append((s, ix))

    gen = [np.zeros(1, dtype=np.uint8)]
    idx = [np.array([k - 6], dtype=np.int64)]
    S, J, I, B = [1], [0], [k - 6], [1]
    for i in range(1, i_max + 1):
        if i == 1:
            g = np.ones(k, dtype=np.uint8)
        else:
            g = kernels.grow_ring(gen[-1], idx[-1])
        ix = np.zeros(len(g), dtype=np.int64)
        for s, val in by_ring.get(i, ()):
            if not 0 <= s < len(g):
                raise SlotOutOfRange(f"slot {s} on ring {i} of size {len(g)}")
            ix[s] = val
        gen.append(g)
        idx.append(ix)
        S.append(len(g))
        J.append(int(g.sum()))
        I.append(int(ix.sum()))
        B.append(B[-1] + len(g))
    return CoverState(k, defects, gen, idx, GrowthSequences(S, J, I, B))


@dataclass
class RecurrenceReport:
    residual_S: dict[int, int]
    residual_J: dict[int, int]

    @property
    def ok(self) -> bool:
        return not any(self.residual_S.values()) and not any(self.residual_J.values())

    @property
    def first_failure(self) -> int | None:
        bad = [i for res in (self.residual_S, self.residual_J) for i, r in res.items() if r]
        return min(bad) if bad else None


def check_recurrences(cs: CoverState | GrowthSequences) -> RecurrenceReport:
    seq = cs.sequences if isinstance(cs, CoverState) else cs
    if seq.i_max < 1:
        raise ValueError("need at least two rings")
    rs, rj = seq.residual_S, seq.residual_J
    return RecurrenceReport(
        residual_S={i: rs[i] for i in range(1, seq.i_max)},
        residual_J={i: rj[i] for i in range(1, seq.i_max)},
    )


def j_accumulation_residuals(cs: CoverState) -> dict[int, int]:
    """``J(i) - (6 + sum of indices on rings 0..i-1)`` for ``i >= 1``."""
    out = {}
    acc = 0
    for i in range(1, cs.i_max + 1):
        acc += int(cs.indices[i - 1].sum())
        out[i] = cs.sequences.J[i] - (6 + acc)
    return out


@dataclass
class LowerBoundReport:
    C: int
    i0: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_lower_bounds(cs: CoverState, C: int | None = None) -> LowerBoundReport:
    """Exact post-defect growth laws.

    With ``i0`` the last ring carrying a scheduled defect (0 if none):
    ``J(i) = C + 6`` for ``i > i0``, ``S(i+1) - S(i) = C + 6`` for ``i > i0``,
    and ``2 B(i) >= (6 + C)(i - i0)^2`` for ``i >= i0``.
    """
    if C is None:
        C = cs.total_index
    i0 = cs.last_defect_ring
    if cs.defects and i0 > cs.i_max - 1:
        raise DefectsUnbounded(f"defects reach ring {i0} but only {cs.i_max} rings were grown")
    seq = cs.sequences
    rep = LowerBoundReport(C=C, i0=i0)
    for i in range(i0 + 1, seq.i_max + 1):
        if seq.J[i] != C + 6:
            rep.failures.append(f"J({i}) = {seq.J[i]} != {C + 6}")
        if i < seq.i_max and seq.S[i + 1] - seq.S[i] != C + 6:
            rep.failures.append(f"S({i + 1}) - S({i}) = {seq.S[i + 1] - seq.S[i]} != {C + 6}")
    for i in range(i0, seq.i_max + 1):
        if 2 * seq.B[i] < (6 + C) * (i - i0) ** 2:
            rep.failures.append(f"B({i}) = {seq.B[i]} < (6+C)/2 (i-i0)^2")
    return rep
