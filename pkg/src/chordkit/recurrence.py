"""Linear recurrences with polynomial coefficients: checking and guessing.

A :class:`RecurrenceSpec` of order ``r`` and degree ``d`` states

    lead(n) * a(n) = sum_{j=1..r} P_j(n) * a(n-j)

with every polynomial of degree at most ``d`` and exact rational
coefficients. ``lead`` defaults to the constant 1. Fitting uses
fraction-exact Gaussian elimination; it can also leave ``lead`` free, which
finds recurrences whose leading coefficient depends on ``n``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .diagram import DomainError

DEFAULT_VALIDATION = 3


def _poly(coeffs: Sequence[Fraction], n: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RecurrenceSpec:
    order: int
    degree: int
    coeffs: tuple[tuple[Fraction, ...], ...]
    leading: tuple[Fraction, ...] = (Fraction(1),)

    def __post_init__(self):
        coeffs = tuple(tuple(_frac(c) for c in row) for row in self.coeffs)
        leading = tuple(_frac(c) for c in self.leading)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "leading", leading)
        if self.order < 1 or len(coeffs) != self.order:
            raise DomainError(f"order {self.order} needs {self.order} coefficient rows, got {len(coeffs)}")
        if any(len(row) > self.degree + 1 for row in coeffs) or len(leading) > self.degree + 1:
            raise DomainError(f"a coefficient polynomial exceeds degree {self.degree}")
        if not any(c for row in coeffs for c in row):
            raise DomainError("recurrence has all coefficients zero")
        pad = self.degree + 1
        object.__setattr__(self, "coeffs", tuple(r + (Fraction(0),) * (pad - len(r)) for r in coeffs))
        object.__setattr__(self, "leading", leading + (Fraction(0),) * (pad - len(leading)))

    @classmethod
    def from_polys(cls, polys: Sequence[Sequence], leading: Sequence = (1,)) -> "RecurrenceSpec":
        """Build from coefficient lists, lowest power of n first."""
        degree = max(len(p) for p in list(polys) + [list(leading)]) - 1
        return cls(len(polys), degree, tuple(tuple(p) for p in polys), tuple(leading))

    def lead_at(self, n: int) -> Fraction:
        return _poly(self.leading, n)

    def poly_at(self, j: int, n: int) -> Fraction:
        return _poly(self.coeffs[j - 1], n)

    def padded(self) -> list[list[Fraction]]:
        """All r+1 polynomials as lists, leading first."""
        return [list(self.leading)] + [list(r) for r in self.coeffs]

    def normalized(self) -> "RecurrenceSpec":
        """Scale to integer coefficients with content 1, first nonzero (lowest j, then t) positive."""
        rows = self.padded()
        flat = [c for r in rows for c in r]
        denom = lcm(*(c.denominator for c in flat))
        ints = [int(c * denom) for c in flat]
        content = 0
        for v in ints:
            content = gcd(content, v)
        sign = 1 if next(v for v in ints if v) > 0 else -1
        scale = Fraction(denom * sign, content)
        scaled = [[c * scale for c in r] for r in rows]
        return RecurrenceSpec(self.order, self.degree, tuple(map(tuple, scaled[1:])), tuple(scaled[0]))

    def scaled(self, factor) -> "RecurrenceSpec":
        f = _frac(factor)
        return RecurrenceSpec(
            self.order,
            self.degree,
            tuple(tuple(c * f for c in r) for r in self.coeffs),
            tuple(c * f for c in self.leading),
        )

    def to_dict(self) -> dict:
        def fmt(c: Fraction) -> str:
            return f"{c.numerator}/{c.denominator}"

        rows = self.padded()
        return {
            "order": self.order,
            "degree": self.degree,
            "leading": [fmt(c) for c in rows[0]],
            "coeffs": [[fmt(c) for c in r] for r in rows[1:]],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "RecurrenceSpec":
        try:
            coeffs = tuple(tuple(Fraction(c) for c in row) for row in data["coeffs"])
            leading = tuple(Fraction(c) for c in data.get("leading", ["1"]))
            return cls(int(data["order"]), int(data["degree"]), coeffs, leading)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad recurrence JSON: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "RecurrenceSpec":
        return cls.from_dict(json.loads(text))

    def describe(self) -> str:
        def poly_str(p: Sequence[Fraction]) -> str:
            terms = []
            for t, c in enumerate(p):
                if not c:
                    continue
                mono = "" if t == 0 else ("n" if t == 1 else f"n^{t}")
                coef = str(c)
                if mono and c == 1:
                    coef = ""
                elif mono and c == -1:
                    coef = "-"
                terms.append(f"{coef}{mono}")
            return " + ".join(terms).replace("+ -", "- ") or "0"

        rows = self.padded()
        rhs = " + ".join(f"({poly_str(r)}) a(n-{j})" for j, r in enumerate(rows[1:], 1) if any(r))
        return f"({poly_str(rows[0])}) a(n) = {rhs}"


# the two recurrences for the k = 2 and k = 3 rows
K2_RECURRENCE = RecurrenceSpec.from_polys([[-1, 2], [1]])
K3_RECURRENCE = RecurrenceSpec.from_polys([[2, 2], [10, -6], [-16, 6], [8, -2], [-1]])


@dataclass(frozen=True)
class ResidualReport:
    residuals: tuple[tuple[int, Fraction], ...]

    @property
    def passed(self) -> bool:
        return all(r == 0 for _, r in self.residuals)

    def failures(self) -> list[tuple[int, Fraction]]:
        return [(n, r) for n, r in self.residuals if r != 0]


def check_recurrence(spec: RecurrenceSpec, seq: Sequence[int], offset: int = 1) -> ResidualReport:
    """Residuals ``lead(n) a(n) - sum_j P_j(n) a(n-j)`` wherever all terms exist.

    ``seq[0]`` is ``a(offset)``.
    """
    if len(seq) <= spec.order:
        raise DomainError(f"sequence of length {len(seq)} too short for order {spec.order}")
    out = []
    for idx in range(spec.order, len(seq)):
        n = offset + idx
        res = spec.lead_at(n) * seq[idx] - sum(
            spec.poly_at(j, n) * seq[idx - j] for j in range(1, spec.order + 1)
        )
        out.append((n, res))
    return ResidualReport(tuple(out))


def _bits(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace, by fraction-exact row reduction.

    Among the rows still available, the pivot with the smallest combined
    numerator/denominator bit length is chosen to limit coefficient growth.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        cands = [i for i in range(r, len(m)) if m[i][col] != 0]
        if not cands:
            continue
        best = min(cands, key=lambda i: _bits(m[i][col]))
        m[r], m[best] = m[best], m[r]
        piv = m[r][col]
        m[r] = [v / piv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -m[row_idx][fc]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class FitResult:
    """Outcome of :func:`fit_recurrence`: ``found``, ``none`` or ``underdetermined``."""

    status: str
    order: int
    degree: int
    spec: Optional[RecurrenceSpec] = None
    nullity: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def min_terms(r: int, d: int, validation: int = DEFAULT_VALIDATION, monic: bool = True) -> int:
    """Shortest sequence :func:`fit_recurrence` accepts for order ``r``, degree ``d``."""
    equations = r * (d + 1) + (0 if monic else d)
    return r + equations + validation


def fit_recurrence(
    seq: Sequence[int],
    offset: int,
    r: int,
    d: int,
    validation: int = DEFAULT_VALIDATION,
    start: Optional[int] = None,
    monic: bool = True,
) -> FitResult:
    """Guess an order-``r``, degree-``d`` recurrence for ``seq`` (``seq[0] = a(offset)``).

    Equations run from ``n = start`` (default ``offset + r``) up to the last
    ``validation`` terms, which are held out. With ``monic`` the coefficient
    of ``a(n)`` is fixed to 1; otherwise it is a free polynomial of degree
    ``d`` and the solution is only determined up to scale. A unique solution
    is normalized and returned only if it also fits the held-out terms.
    """
    if r < 1 or d < 0:
        raise DomainError(f"need order >= 1 and degree >= 0, got r={r}, d={d}")
    need = min_terms(r, d, validation, monic)
    if len(seq) < need:
        raise DomainError(f"order {r}, degree {d} needs at least {need} terms, got {len(seq)}")
    first = offset + r if start is None else max(start, offset + r)
    last_train = offset + len(seq) - 1 - validation
    lead_terms = 1 if monic else d + 1
    ncols = lead_terms + r * (d + 1)
    rows = []
    for n in range(first, last_train + 1):
        idx = n - offset
        row = [Fraction(seq[idx] * n**t) for t in range(lead_terms)]
        for j in range(1, r + 1):
            row.extend(Fraction(-seq[idx - j] * n**t) for t in range(d + 1))
        rows.append(row)
    if not rows:
        return FitResult("underdetermined", r, d, nullity=ncols - (1 if monic else 0))
    basis = nullspace(rows, ncols)
    if monic:
        # an inhomogeneous solution exists iff some null vector has a nonzero lead
        if not any(v[0] for v in basis):
            return FitResult("none", r, d)
        if len(basis) > 1:
            return FitResult("underdetermined", r, d, nullity=len(basis) - 1)
    else:
        if not basis:
            return FitResult("none", r, d)
        if len(basis) > 1:
            return FitResult("underdetermined", r, d, nullity=len(basis))
    vec = basis[0]
    lead, rest = vec[:lead_terms], vec[lead_terms:]
    polys = [rest[j * (d + 1):(j + 1) * (d + 1)] for j in range(r)]
    if not any(lead) or not any(c for p in polys for c in p):
        return FitResult("none", r, d)
    spec = RecurrenceSpec(r, d, tuple(map(tuple, polys)), tuple(lead)).normalized()
    held_out = list(seq[len(seq) - validation - r:])
    if validation and not check_recurrence(spec, held_out, offset + len(seq) - validation - r).passed:
        return FitResult("none", r, d)
    return FitResult("found", r, d, spec=spec, nullity=1)


def search_recurrence(
    seq: Sequence[int],
    offset: int,
    max_order: int,
    max_degree: int,
    validation: int = DEFAULT_VALIDATION,
    monic: bool = True,
) -> Optional[FitResult]:
    """First validated fit in increasing ``(r + d, r)`` order, skipping candidates with too few terms."""
    candidates = sorted(
        ((r, d) for r in range(1, max_order + 1) for d in range(max_degree + 1)),
        key=lambda rd: (rd[0] + rd[1], rd[0]),
    )
    for r, d in candidates:
        if len(seq) < min_terms(r, d, validation, monic):
            continue
        res = fit_recurrence(seq, offset, r, d, validation, monic=monic)
        if res.found:
            return res
    return None


def read_sequence_csv(text: str) -> tuple[int, list[int]]:
    """Parse ``n,value`` rows (consecutive n, optional header) into ``(offset, values)``."""
    rows = [r for r in csv.reader(io.StringIO(text)) if r and r[0].strip()]
    if rows and not rows[0][0].strip().lstrip("-").isdigit():
        rows = rows[1:]
    if not rows:
        raise DomainError("sequence CSV has no rows")
    ns = [int(r[0]) for r in rows]
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise DomainError("sequence CSV must list consecutive n")
    return ns[0], [int(r[1]) for r in rows]


def write_sequence_csv(seq: Sequence[int], offset: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for i, v in enumerate(seq):
        w.writerow([offset + i, str(v)])
    return buf.getvalue()
