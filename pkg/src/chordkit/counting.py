"""Polynomial-time counting of diagrams with minimum chord length ``k``.

The scan walks positions ``1..2n`` left to right. A chord that started fewer
than ``k`` positions ago cannot close yet, so the state only needs a
``(k-1)``-bit mask of recent starts plus a count of older ("mature") open
chords. Each layer holds at most ``2^(k-1) * (n+1)`` states, giving on the
order of ``2^k n^2`` transitions overall.
"""
from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .diagram import DomainError


class DPState(NamedTuple):
    recent_starts: int
    mature_open: int


@dataclass
class ScanStats:
    """Instrumentation for :func:`count_dp`."""

    transitions: int = 0
    peak_states: int = 0


def count_dp(n: int, k: int, stats: Optional[ScanStats] = None) -> int:
    """Return the number of size-``n`` diagrams whose chords all have length >= ``k``."""
    if n < 1 or k < 1:
        raise DomainError(f"count needs n >= 1 and k >= 1, got n={n}, k={k}")
    if k > n:
        return 0
    size = 2 * n
    width = k - 1
    keep = (1 << width) - 1
    layer: dict[DPState, int] = {DPState(0, 0): 1}
    transitions = 0
    peak = 1
    for p in range(1, size + 1):
        remaining = size - p
        nxt: dict[DPState, int] = defaultdict(int)
        can_start = p + k <= size
        for (mask, mature), ways in layer.items():
            if can_start:
                transitions += 1
                full = (mask << 1) | 1
                state = DPState(full & keep, mature + (full >> width & 1))
                if state.recent_starts.bit_count() + state.mature_open <= remaining:
                    nxt[state] += ways
            if mature:
                transitions += 1
                full = mask << 1
                state = DPState(full & keep, mature - 1 + (full >> width & 1))
                if state.recent_starts.bit_count() + state.mature_open <= remaining:
                    nxt[state] += ways * mature
        layer = nxt
        peak = max(peak, len(layer))
    if stats is not None:
        stats.transitions += transitions
        stats.peak_states = max(stats.peak_states, peak)
    return layer.get(DPState(0, 0), 0)


@dataclass
class CountTable:
    """Counts for ``1 <= k <= n <= max_n``; cells with ``k > n`` are zero and not stored."""

    max_n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def row(self, k: int) -> list[int]:
        return [self.get(n, k) for n in range(1, self.max_n + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k"] + list(range(1, self.max_n + 1)))
        for k in range(1, self.max_n + 1):
            writer.writerow([k] + [str(v) for v in self.row(k)])
        return buf.getvalue()

    def to_json(self) -> str:
        cells = [
            {"n": n, "k": k, "count": str(self.entries[(n, k)])}
            for k in range(1, self.max_n + 1)
            for n in range(k, self.max_n + 1)
        ]
        return json.dumps(cells, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        cells = json.loads(text)
        entries = {(c["n"], c["k"]): int(c["count"]) for c in cells}
        max_n = max((n for n, _ in entries), default=0)
        return cls(max_n, entries)


def build_table(max_n: int) -> CountTable:
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    table = CountTable(max_n)
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            table.entries[(n, k)] = count_dp(n, k)
    return table


def row_sequence(k: int, max_n: int) -> list[int]:
    """Counts for fixed ``k`` and ``n = k, k+1, ..., max_n``."""
    if max_n < k:
        raise DomainError(f"max_n={max_n} is below k={k}")
    return [count_dp(n, k) for n in range(k, max_n + 1)]
