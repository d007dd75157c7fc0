"""Exhaustive generation of diagrams with a minimum chord length.

Used as the ground-truth oracle for the counting and bijection modules.
"""
from __future__ import annotations

import os
from typing import Iterator, Optional

from .diagram import Chord, ChordDiagram, DomainError

DEFAULT_ORACLE_CEILING = 8
CEILING_ENV = "CHORDKIT_ORACLE_CEILING"


def oracle_ceiling() -> int:
    """Largest size the brute-force oracle accepts; env var overrides."""
    raw = os.environ.get(CEILING_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CEILING
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{CEILING_ENV} must be an integer, got {raw!r}") from None


def _completable(free: list[int], k: int) -> bool:
    # Pairing the t-th free point with the (t+m)-th maximises the shortest
    # chord, so the branch is viable iff that pairing reaches length k.
    m = len(free) // 2
    return all(free[t + m] - free[t] >= k for t in range(m))


class DiagramStream:
    """Lexicographic stream over all size-``n`` diagrams with chords of length >= ``k``.

    ``first_partner`` restricts the stream to diagrams whose chord at index 1
    ends at that partner, which splits the search into independent pieces.
    """

    def __init__(self, n: int, k: int = 1, first_partner: Optional[int] = None):
        if n < 1 or k < 1:
            raise DomainError(f"enumeration needs n >= 1 and k >= 1, got n={n}, k={k}")
        self.n = n
        self.k = k
        self.first_partner = first_partner

    def __iter__(self) -> Iterator[ChordDiagram]:
        return self._generate()

    def _generate(self) -> Iterator[ChordDiagram]:
        n, k = self.n, self.k
        if k > n:
            return
        size = 2 * n
        partner = [0] * (size + 1)
        chords: list[tuple[int, int]] = []

        def rec(i: int):
            while i <= size and partner[i]:
                i += 1
            if i > size:
                yield ChordDiagram(tuple(Chord(s, e) for s, e in chords))
                return
            candidates = range(i + k, size + 1)
            if i == 1 and self.first_partner is not None:
                candidates = [self.first_partner] if self.first_partner in candidates else []
            for j in candidates:
                if partner[j]:
                    continue
                partner[i] = partner[j] = 1
                chords.append((i, j))
                free = [f for f in range(i + 1, size + 1) if not partner[f]]
                if _completable(free, k):
                    yield from rec(i + 1)
                chords.pop()
                partner[i] = partner[j] = 0

        yield from rec(1)


def enumerate_diagrams(n: int, k: int = 1) -> DiagramStream:
    return DiagramStream(n, k)


def count_brute(n: int, k: int = 1, ceiling: Optional[int] = None) -> int:
    """Count diagrams by walking the full stream. Refuses sizes above the ceiling."""
    limit = oracle_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise DomainError(
            f"n={n} exceeds the brute-force ceiling {limit}; use the DP counter (count_dp) instead"
        )
    return sum(1 for _ in DiagramStream(n, k))
