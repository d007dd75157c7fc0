"""Linear chord diagrams: chords, parsing, geometry and region splits.

Indices are 1-based throughout. A diagram of size ``n`` matches the points
``1..2n`` in pairs; each pair is a :class:`Chord` with ``start < end``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union


class ChordError(ValueError):
    """Base class for all chordkit errors."""


class DiagramParseError(ChordError):
    """Malformed diagram text."""


class DomainError(ChordError):
    """An operation was called outside the region where it is defined."""


@dataclass(frozen=True, order=True)
class Chord:
    start: int
    end: int

    def __post_init__(self):
        if self.start >= self.end:
            raise DiagramParseError(f"chord {self.start}-{self.end}: start must be below end")
        if self.start < 1:
            raise DiagramParseError(f"chord {self.start}-{self.end}: index {self.start} below 1")

    @property
    def length(self) -> int:
        return self.end - self.start

    def __str__(self) -> str:
        return f"{self.start}-{self.end}"


@dataclass(frozen=True)
class ChordDiagram:
    """A perfect matching of ``1..2n``, chords sorted by start.

    Build instances with :meth:`from_pairs` or :func:`parse_diagram`; both
    validate and canonicalize.
    """

    chords: tuple[Chord, ...]

    def __post_init__(self):
        chords = tuple(sorted(self.chords))
        object.__setattr__(self, "chords", chords)
        seen: set[int] = set()
        for c in chords:
            for i in (c.start, c.end):
                if i in seen:
                    raise DiagramParseError(f"index {i} used twice")
                seen.add(i)
        size = 2 * len(chords)
        for i in range(1, size + 1):
            if i not in seen:
                raise DiagramParseError(f"index {i} missing")
        extra = sorted(i for i in seen if i > size)
        if extra:
            raise DiagramParseError(f"index {extra[0]} out of range 1..{size}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "ChordDiagram":
        return cls(tuple(Chord(min(a, b), max(a, b)) for a, b in pairs))

    @property
    def n(self) -> int:
        return len(self.chords)

    def pairs(self) -> list[tuple[int, int]]:
        return [(c.start, c.end) for c in self.chords]

    def partner_map(self) -> dict[int, Chord]:
        """Map each index to the chord using it."""
        out = {}
        for c in self.chords:
            out[c.start] = c
            out[c.end] = c
        return out

    def chord_ending_at(self, index: int) -> Chord | None:
        for c in self.chords:
            if c.end == index:
                return c
        return None

    def __str__(self) -> str:
        return format_diagram(self)

    def __len__(self) -> int:
        return len(self.chords)

    def __iter__(self):
        return iter(self.chords)


_PAIR = re.compile(r"^\s*(-?\d+)\s*-\s*(-?\d+)\s*$")


def parse_diagram(text: str) -> ChordDiagram:
    """Parse ``"1-3,2-6,4-5"`` style text into a canonical diagram.

    Whitespace around tokens is ignored. Any duplicated, missing or
    out-of-order index raises :class:`DiagramParseError` naming the index.
    """
    text = text.strip()
    if not text:
        raise DiagramParseError("empty diagram")
    chords = []
    used: set[int] = set()
    for token in text.split(","):
        m = _PAIR.match(token)
        if not m:
            raise DiagramParseError(f"cannot read chord {token.strip()!r}; expected s-e")
        s, e = int(m.group(1)), int(m.group(2))
        for i in (s, e):
            if i in used:
                raise DiagramParseError(f"index {i} used twice")
            used.add(i)
        if s >= e:
            raise DiagramParseError(f"chord {s}-{e}: start must be below end (index {s})")
        chords.append(Chord(s, e))
    return ChordDiagram(tuple(chords))


def parse_chord(text: str) -> Chord:
    m = _PAIR.match(text)
    if not m:
        raise DiagramParseError(f"cannot read chord {text.strip()!r}; expected s-e")
    return Chord(int(m.group(1)), int(m.group(2)))


def format_diagram(d: ChordDiagram) -> str:
    return ",".join(str(c) for c in d.chords)


def min_chord_length(d: ChordDiagram) -> int:
    return min(c.length for c in d.chords)


def in_class(d: ChordDiagram, k: int) -> bool:
    """True when every chord of ``d`` has length at least ``k``."""
    return min_chord_length(d) >= k


def covers(c: Chord, target: Union[int, Chord]) -> bool:
    if isinstance(target, Chord):
        return covers(c, target.start) and covers(c, target.end)
    return c.start < target < c.end


@dataclass(frozen=True)
class RegionSplit:
    """The left / middle / right blocks of ``1..2n`` for minimum length ``k``.

    ``left`` is ``1..k``, ``middle`` is ``k+1..2n-k`` and ``right`` is
    ``2n-k+1..2n``. The middle is empty when ``n == k``.
    """

    n: int
    k: int

    def __post_init__(self):
        if self.k < 1 or self.k > self.n:
            raise DomainError(f"region split needs 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def left(self) -> range:
        return range(1, self.k + 1)

    @property
    def middle(self) -> range:
        return range(self.k + 1, 2 * self.n - self.k + 1)

    @property
    def right(self) -> range:
        return range(2 * self.n - self.k + 1, 2 * self.n + 1)

    def in_middle(self, i: int) -> bool:
        return self.k < i <= 2 * self.n - self.k

    def region_of(self, i: int) -> str:
        if i <= self.k:
            return "L"
        if i <= 2 * self.n - self.k:
            return "M"
        return "R"


def region_split(n: int, k: int) -> RegionSplit:
    return RegionSplit(n, k)


@dataclass(frozen=True)
class ChordClassification:
    mid: frozenset[Chord]
    side: frozenset[Chord]


def classify(d: ChordDiagram, k: int) -> ChordClassification:
    """Split chords into those touching the middle block and the rest."""
    split = RegionSplit(d.n, k)
    mid = frozenset(c for c in d.chords if split.in_middle(c.start) or split.in_middle(c.end))
    return ChordClassification(mid=mid, side=frozenset(d.chords) - mid)


def theorem_region(n: int, k: int) -> bool:
    """Whether ``(n, k)`` satisfies ``n >= k >= 1`` and ``n >= 3(n-k)``."""
    return 1 <= k <= n and n >= 3 * (n - k)


@dataclass(frozen=True)
class LemmaReport:
    no_mid_mid_chord: bool
    mid_starts: int
    mid_ends: int

    def holds(self, n: int, k: int) -> bool:
        return self.no_mid_mid_chord and self.mid_starts == self.mid_ends == n - k


def check_structural_lemmas(d: ChordDiagram, k: int) -> LemmaReport:
    """Measure the middle block of ``d``: mid-to-mid chords, starts and ends.

    Only defined for ``d`` with minimum length ``k`` inside the region
    ``n >= 3(n-k)``; outside it the counts carry no guarantee, so the call
    is refused.
    """
    n = d.n
    if not theorem_region(n, k):
        raise DomainError(f"structural lemmas need n >= k and n >= 3(n-k); got n={n}, k={k}")
    if not in_class(d, k):
        raise DomainError(f"diagram has a chord shorter than {k}")
    split = RegionSplit(n, k)
    no_mid_mid = not any(split.in_middle(c.start) and split.in_middle(c.end) for c in d.chords)
    starts = sum(1 for c in d.chords if split.in_middle(c.start))
    ends = sum(1 for c in d.chords if split.in_middle(c.end))
    return LemmaReport(no_mid_mid, starts, ends)
