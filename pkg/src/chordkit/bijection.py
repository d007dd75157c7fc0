"""The insert-and-swap maps between neighbouring cells of the count table.

``alpha(d, k, i)`` sends a size-``n`` diagram with minimum length ``k`` to a
size-``n+1`` diagram with minimum length ``k+1`` whose marked chord has
exactly ``i`` side-chord starts to its left. ``beta`` undoes it. Both work
on a mutable start/end representation where a "swap" exchanges the start
positions of two chords while their end points stay put.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .counting import count_dp
from .diagram import (
    Chord,
    ChordDiagram,
    DomainError,
    RegionSplit,
    classify,
    in_class,
    min_chord_length,
    theorem_region,
)
from .enumeration import DiagramStream, oracle_ceiling


def _require_class(d: ChordDiagram, k: int):
    if d.n < k:
        raise DomainError(f"diagram of size {d.n} cannot have minimum length {k}")
    if not in_class(d, k):
        raise DomainError(f"diagram has minimum chord length {min_chord_length(d)} < {k}")


def _shift_index(i: int, n: int, k: int) -> int:
    # New points are inserted before old k+1 and after old 2n-k.
    if i <= k:
        return i
    if i <= 2 * n - k:
        return i + 1
    return i + 2


def _build(chords) -> ChordDiagram:
    return ChordDiagram(tuple(Chord(s, e) for s, e in chords))


def _inserted(d: ChordDiagram, k: int):
    n = d.n
    side = classify(d, k).side
    shifted = [[_shift_index(c.start, n, k), _shift_index(c.end, n, k)] for c in d.chords]
    side_idx = [idx for idx, c in enumerate(d.chords) if c in side]
    new = [k + 1, 2 * n - k + 2]
    return shifted, side_idx, new


def insert_middle_chord(d: ChordDiagram, k: int) -> ChordDiagram:
    """Add one chord spanning exactly the middle block (the zero-swap case of :func:`alpha`)."""
    _require_class(d, k)
    shifted, _, new = _inserted(d, k)
    return _build(shifted + [new])


def alpha(d: ChordDiagram, k: int, i: int) -> ChordDiagram:
    n = d.n
    if not theorem_region(n, k):
        raise DomainError(f"alpha needs n >= k >= 1 and n >= 3(n-k); got n={n}, k={k}")
    if not 0 <= i <= n - k:
        raise DomainError(f"class index i={i} outside 0..{n - k}")
    _require_class(d, k)
    shifted, side_idx, new = _inserted(d, k)

    def side_left():
        return [idx for idx in side_idx if shifted[idx][0] < new[0]]

    left = side_left()
    while len(left) > i:
        if not left:
            raise AssertionError("alpha ran out of side chords to swap with")
        nearest = max(left, key=lambda idx: shifted[idx][0])
        shifted[nearest][0], new[0] = new[0], shifted[nearest][0]
        left = side_left()
    return _build(shifted + [new])


def _marked_chord(d: ChordDiagram, k: int) -> Chord:
    marked = d.chord_ending_at(2 * d.n - k + 1)
    if marked is None:
        raise DomainError(f"index {2 * d.n - k + 1} is a start point; no chord ends just after the middle")
    return marked


def beta(d: ChordDiagram, k: int) -> ChordDiagram:
    """Swap the marked chord's start rightwards past every side chord, then delete it."""
    n = d.n
    if k < 2 or k > n or not n > 3 * (n - k):
        raise DomainError(f"beta needs n >= k >= 2 and n > 3(n-k); got n={n}, k={k}")
    _require_class(d, k)
    marked = _marked_chord(d, k)
    side = classify(d, k).side - {marked}
    chords = [[c.start, c.end] for c in d.chords if c != marked]
    side_idx = [idx for idx, c in enumerate(c for c in d.chords if c != marked) if c in side]
    start, end = marked.start, marked.end
    while True:
        right = [idx for idx in side_idx if chords[idx][0] > start]
        if not right:
            break
        nearest = min(right, key=lambda idx: chords[idx][0])
        chords[nearest][0], start = start, chords[nearest][0]

    def renumber(x: int) -> int:
        return x - (x > start) - (x > end)

    return _build([[renumber(s), renumber(e)] for s, e in chords])


def class_index(d: ChordDiagram, k: int) -> int:
    """Number of side-chord starts left of the chord ending at ``2n-k+1``.

    ``d`` is a size-``n`` diagram with minimum length ``k`` where the source
    cell ``(n-1, k-1)`` lies in the theorem region.
    """
    n = d.n
    if not (k >= 2 and theorem_region(n - 1, k - 1)):
        raise DomainError(f"class index needs (n-1, k-1) in the theorem region; got n={n}, k={k}")
    _require_class(d, k)
    marked = _marked_chord(d, k)
    side = classify(d, k).side
    return sum(1 for c in side if c.start < marked.start)


CHECKS = (
    "image_containment",
    "class_containment",
    "disjointness",
    "coverage",
    "beta_after_alpha",
    "alpha_after_beta",
)


@dataclass
class TheoremReport:
    n: int
    k: int
    mode: str
    source_count: int
    target_count: int
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def fail(self, check: str, witness: Optional[ChordDiagram | str] = None):
        if self.checks.get(check, True):
            self.checks[check] = False
            if witness is not None:
                self.witnesses[check] = str(witness)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "source_count": str(self.source_count),
            "target_count": str(self.target_count),
            "factor": self.n - self.k + 1,
            "passed": self.passed,
            "checks": dict(self.checks),
            "witnesses": dict(self.witnesses),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_text(self) -> str:
        factor = self.n - self.k + 1
        lines = [
            f"theorem (n={self.n}, k={self.k}) mode={self.mode}: {'PASS' if self.passed else 'FAIL'}",
            f"  |M_{self.k + 1}^{self.n + 1}| = {self.target_count}, "
            f"{factor} * |M_{self.k}^{self.n}| = {factor} * {self.source_count} = {factor * self.source_count}",
        ]
        for name, ok in self.checks.items():
            line = f"  {name}: {'pass' if ok else 'FAIL'}"
            if name in self.witnesses:
                line += f" (witness {self.witnesses[name]})"
            lines.append(line)
        return "\n".join(lines)


def verify_theorem(n: int, k: int, mode: str = "counts") -> TheoremReport:
    """Check ``|M_{k+1}^{n+1}| = (n-k+1) |M_k^n|`` by counting or through the maps.

    ``exhaustive`` mode enumerates the source cell, applies every ``alpha``,
    and checks containment, disjointness, coverage and both round trips
    against an enumeration of the target cell.
    """
    if not theorem_region(n, k):
        raise DomainError(f"theorem needs n >= k >= 1 and n >= 3(n-k); got n={n}, k={k}")
    factor = n - k + 1
    if mode == "counts":
        src, tgt = count_dp(n, k), count_dp(n + 1, k + 1)
        report = TheoremReport(n, k, mode, src, tgt)
        report.checks["count_identity"] = tgt == factor * src
        return report
    if mode != "exhaustive":
        raise DomainError(f"unknown mode {mode!r}; use counts or exhaustive")
    limit = oracle_ceiling()
    if n + 1 > limit:
        raise DomainError(f"exhaustive mode needs n+1 <= oracle ceiling {limit}")

    sources = list(DiagramStream(n, k))
    targets = list(DiagramStream(n + 1, k + 1))
    report = TheoremReport(n, k, mode, len(sources), len(targets))
    for name in CHECKS:
        report.checks[name] = True

    images: dict[ChordDiagram, tuple[ChordDiagram, int]] = {}
    for d in sources:
        for i in range(factor):
            img = alpha(d, k, i)
            if img.n != n + 1 or not in_class(img, k + 1):
                report.fail("image_containment", img)
                continue
            if class_index(img, k + 1) != i:
                report.fail("class_containment", img)
            if img in images:
                report.fail("disjointness", img)
            images[img] = (d, i)
            if beta(img, k + 1) != d:
                report.fail("beta_after_alpha", d)

    target_set = set(targets)
    if len(images) != len(target_set) or len(target_set) != factor * len(sources):
        missing = next(iter(target_set - images.keys()), None)
        report.fail("coverage", missing)
    elif images.keys() != target_set:
        report.fail("coverage", next(iter(target_set - images.keys())))

    for t in targets:
        i = class_index(t, k + 1)
        if not 0 <= i <= n - k:
            report.fail("class_containment", t)
            continue
        try:
            back = alpha(beta(t, k + 1), k, i)
        except DomainError:
            back = None
        if back != t:
            report.fail("alpha_after_beta", t)
    return report
