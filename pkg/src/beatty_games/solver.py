"""P-position generation, the brute-force retrograde oracle, and table tooling.

Three generators share the mex-driven first component a_n = mex{a_k, b_k}:

* recurrence_closed  — b_n = f(a_{n-1}, b_{n-1}, a_n) + b_{n-1} + a_n - a_{n-1},
  the closed formula that is only guaranteed when consecutive exclusion
  intervals leave no gaps (2*min f - max f >= 1).
* solve_doublemex    — b_n = least b >= a_n avoiding every prior b_k and every
  interval |(b-b_k)-(a_n-a_k)| < f(a_k,b_k,a_n); always the true P-positions
  of the modified game.
* solve_relaxed      — the closed formula again, valid for relaxed Wythoff
  whenever f >= 0 and f evaluates to >= 1 at the first step.

The retrograde oracle is the independent ground truth: it labels the whole
board by backward induction over token count and never looks at a recurrence.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

from .games import (
    SCHEMA,
    ConstraintSpec,
    Family,
    Position,
    RuleSet,
    eval_constraint,
)
from .quadfield import QuadraticNumber, beatty_floor, conjugate_beatty, delta2

MAX_ORACLE_BOUND_ENV = "BEATTY_GAMES_MAX_ORACLE_BOUND"
_DEFAULT_MAX_ORACLE_BOUND = 4096


class HypothesisError(ValueError):
    """A generator's validity hypothesis failed on the visited values."""


class TableSource(Enum):
    CLOSED_RECURRENCE = "closed_recurrence"
    DOUBLE_MEX = "double_mex"
    RELAXED_RECURRENCE = "relaxed_recurrence"
    ORACLE = "oracle"


@dataclass(frozen=True)
class PTable:
    """Ordered P-position pairs (a_n, b_n) with the generator that produced them."""

    pairs: Tuple[Tuple[int, int], ...]
    source: TableSource

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("a table needs at least the terminal pair")
        if self.pairs[0] != (0, 0):
            raise ValueError("tables start at (0, 0)")
        prev_a = -1
        for a, b in self.pairs:
            if a <= prev_a:
                raise ValueError("a_n must be strictly increasing")
            if b < a:
                raise ValueError(f"pair ({a}, {b}) violates a <= b")
            prev_a = a
        if self.source in (TableSource.DOUBLE_MEX, TableSource.RELAXED_RECURRENCE):
            seen: Set[int] = set()
            for a, b in self.pairs[1:]:
                for v in {a, b}:
                    if v in seen:
                        raise ValueError(f"value {v} repeats in the table")
                    seen.add(v)

    def __len__(self) -> int:
        return len(self.pairs)


def mex(values) -> int:
    """Least non-negative integer not in the collection."""
    present = set(values)
    out = 0
    while out in present:
        out += 1
    return out


class _MexStream:
    """Incremental mex over a growing set of used integers."""

    def __init__(self):
        self.used: Set[int] = set()
        self._next = 0

    def add(self, v: int) -> None:
        self.used.add(v)

    def take(self) -> int:
        while self._next in self.used:
            self._next += 1
        self.used.add(self._next)
        return self._next


def recurrence_closed(constraint: ConstraintSpec, count: int) -> PTable:
    """First `count` pairs of the closed recurrence, whether or not they are P."""
    if count < 1:
        raise ValueError("count must be >= 1")
    pairs = [(0, 0)]
    stream = _MexStream()
    stream.add(0)
    for _ in range(1, count):
        a_prev, b_prev = pairs[-1]
        a = stream.take()
        f = eval_constraint(constraint, a_prev, b_prev, a)
        if f is None:
            raise ValueError(f"constraint undefined at ({a_prev}, {b_prev}, {a})")
        b = f + b_prev + a - a_prev
        stream.add(b)
        pairs.append((a, b))
    return PTable(tuple(pairs), TableSource.CLOSED_RECURRENCE)


def _merge(intervals: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    intervals.sort()
    out: List[Tuple[int, int]] = []
    for lo, hi in intervals:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def solve_doublemex(constraint: ConstraintSpec, count: int) -> PTable:
    """True P-positions of the modified game, by the double-mex construction.

    Each prior pair (a_k, b_k) excludes the interval of radius f-1 around
    a_n + b_k - a_k (with f = f(a_k, b_k, a_n)); b_n is the least b >= a_n
    outside every interval and distinct from every prior b_k.  Undefined
    constraint values disallow the diagonal, i.e. contribute no interval.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    pairs = [(0, 0)]
    stream = _MexStream()
    stream.add(0)
    b_used: Set[int] = set()
    for _ in range(1, count):
        a = stream.take()
        intervals: List[Tuple[int, int]] = []
        for a_k, b_k in pairs:
            f = eval_constraint(constraint, a_k, b_k, a)
            if f is not None and f >= 1:
                center = a + b_k - a_k
                intervals.append((center - (f - 1), center + (f - 1)))
        merged = _merge(intervals)
        b = a
        moved = True
        while moved:
            moved = False
            for lo, hi in merged:
                if lo <= b <= hi:
                    b = hi + 1
                    moved = True
            while b in b_used:
                b += 1
                moved = True
        pairs.append((a, b))
        b_used.add(b)
        stream.add(b)
    return PTable(tuple(pairs), TableSource.DOUBLE_MEX)


def solve_relaxed(constraint: ConstraintSpec, count: int) -> PTable:
    """P-positions of relaxed Wythoff via b_n = f + b_{n-1} + a_n - a_{n-1}.

    Checks the validity hypotheses on every visited value: f >= 0 throughout
    and f >= 1 at the first step (x0 = 1).  Raises HypothesisError otherwise.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    pairs = [(0, 0)]
    stream = _MexStream()
    stream.add(0)
    for n in range(1, count):
        a_prev, b_prev = pairs[-1]
        a = stream.take()
        f = eval_constraint(constraint, a_prev, b_prev, a)
        if f is None:
            f = 0
        if f < 0:
            raise HypothesisError(f"constraint is negative ({f}) at x0 = {a}")
        if n == 1 and f < 1:
            raise HypothesisError("constraint must be >= 1 at x0 = 1")
        b = f + b_prev + a - a_prev
        stream.add(b)
        pairs.append((a, b))
    return PTable(tuple(pairs), TableSource.RELAXED_RECURRENCE)


def retrograde_oracle(rules: RuleSet, bound: int) -> Set[Position]:
    """Exact P-positions with y <= bound, by backward induction on token count.

    All moves shrink the total, so positions of equal sum are independent and
    the truncation to the board is exact.  A position is N exactly when some
    move reaches an already-labelled P-position; the scan keeps the P-set in
    lookup maps so each position costs O(#P-pairs) in the worst case.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    cap = int(os.environ.get(MAX_ORACLE_BOUND_ENV, _DEFAULT_MAX_ORACLE_BOUND))
    if bound > cap:
        raise ValueError(
            f"oracle bound {bound} exceeds the memory guard {cap} "
            f"(raise {MAX_ORACLE_BOUND_ENV} to override)"
        )
    relaxed = rules.family is Family.RELAXED
    spec = rules.constraint
    pset: Set[Position] = set()
    plist: List[Position] = []
    partner: Dict[int, int] = {}
    larger_to_smaller: Dict[int, int] = {}

    def diagonal_hits_p(x: int, y: int) -> bool:
        for a, b in plist:
            for d1, d2 in ((a, b), (b, a)):
                if d1 > x - 1 or d2 > y - 1:
                    continue
                f = eval_constraint(spec, d1, d2, x)
                if f is None:
                    continue
                diff = (y - d2) - (x - d1)
                if (diff < f) if relaxed else (abs(diff) < f):
                    return True
        return False

    for total in range(0, 2 * bound + 1):
        for x in range(max(0, total - bound), total // 2 + 1):
            y = total - x
            if total > 0:
                # Nim move keeping the x-pile: needs a pair containing x below y
                if x in partner and partner[x] < y:
                    continue
                # Nim move keeping the y-pile: needs a pair with larger element y
                if y in larger_to_smaller and larger_to_smaller[y] < x:
                    continue
                if diagonal_hits_p(x, y):
                    continue
            pos = Position(x, y)
            pset.add(pos)
            plist.append(pos)
            partner[x] = y
            partner[y] = x
            larger_to_smaller[y] = x
    return pset


def compare_tables(t1: PTable, t2: PTable) -> Optional[int]:
    """Least index where the tables disagree on their common prefix, else None."""
    for n in range(min(len(t1), len(t2))):
        if t1.pairs[n] != t2.pairs[n]:
            return n
    return None


@dataclass(frozen=True)
class GapReport:
    """A positive gap between consecutive exclusion intervals I_{k-1} and I_k.

    gap_size = f(a_k) - 2*f(a_n) + 1 > 0; filled tells whether some earlier
    b_j already lands inside the gap, rescuing the closed recurrence.
    """

    n: int
    k: int
    gap_size: int
    filled: bool


def detect_gap(alpha: QuadraticNumber, horizon: int) -> List[GapReport]:
    """Positive inter-interval gaps of the Beatty constraint, up to `horizon`.

    Works in the Beatty world: pairs are (floor(n*alpha), floor(n*beta)) and
    the constraint value at index m is delta2(alpha, m).
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    beta = conjugate_beatty(alpha).beta
    a = [beatty_floor(alpha, n) for n in range(horizon + 1)]
    b = [beatty_floor(beta, n) for n in range(horizon + 1)]
    f = [0] + [delta2(alpha, n) for n in range(1, horizon + 1)]
    reports: List[GapReport] = []
    for n in range(2, horizon + 1):
        fn = f[n]
        for k in range(1, n):
            size = f[k] - 2 * fn + 1
            if size <= 0:
                continue
            lo = a[n] + b[k - 1] - a[k - 1] + fn
            filled = any(lo <= b[j] <= lo + size - 1 for j in range(n))
            reports.append(GapReport(n=n, k=k, gap_size=size, filled=filled))
    return reports


def reconstruct_constraint(table: PTable) -> List[Tuple[int, int]]:
    """Recover f(a_n) = (b_n - a_n) - (b_{n-1} - a_{n-1}) for each n >= 1."""
    out = []
    for n in range(1, len(table)):
        a, b = table.pairs[n]
        a_prev, b_prev = table.pairs[n - 1]
        out.append((a, (b - a) - (b_prev - a_prev)))
    return out


# -- export / import ---------------------------------------------------------------

CSV_COLUMNS = ["n", "a_n", "b_n", "floor_n_alpha", "floor_n_beta", "delta2"]


def _beatty_columns(alpha: QuadraticNumber, count: int):
    beta = conjugate_beatty(alpha).beta
    rows = []
    for n in range(count):
        rows.append(
            (
                beatty_floor(alpha, n),
                beatty_floor(beta, n),
                delta2(alpha, n) if n >= 1 else None,
            )
        )
    return rows


def ptable_to_csv(table: PTable, alpha: Optional[QuadraticNumber] = None) -> str:
    """CSV layout matching the P-row/Beatty-row tables, for direct diffing."""
    buf = io.StringIO()
    buf.write(f"# {SCHEMA} ptable source={table.source.value}\n")
    writer = csv.writer(buf)
    cols = CSV_COLUMNS if alpha is not None else CSV_COLUMNS[:3]
    writer.writerow(cols)
    extra = _beatty_columns(alpha, len(table)) if alpha is not None else None
    for n, (a, b) in enumerate(table.pairs):
        row: List[object] = [n, a, b]
        if extra is not None:
            fa, fb, d2 = extra[n]
            row += [fa, fb, "" if d2 is None else d2]
        writer.writerow(row)
    return buf.getvalue()


def ptable_from_csv(text: str) -> PTable:
    lines = text.splitlines()
    source = TableSource.ORACLE
    body = []
    for line in lines:
        if line.startswith("#"):
            for token in line.split():
                if token.startswith("source="):
                    source = TableSource(token.split("=", 1)[1])
        elif line.strip():
            body.append(line)
    reader = csv.reader(body)
    header = next(reader)
    if header[:3] != CSV_COLUMNS[:3]:
        raise ValueError(f"unexpected CSV header: {header}")
    pairs = [(int(row[1]), int(row[2])) for row in reader]
    return PTable(tuple(pairs), source)


def ptable_to_dict(table: PTable, alpha: Optional[QuadraticNumber] = None) -> dict:
    data = {
        "schema": SCHEMA,
        "kind": "ptable",
        "source": table.source.value,
        "pairs": [list(p) for p in table.pairs],
    }
    if alpha is not None:
        data["alpha"] = str(alpha)
        data["beatty"] = [
            {"floor_n_alpha": fa, "floor_n_beta": fb, "delta2": d2}
            for fa, fb, d2 in _beatty_columns(alpha, len(table))
        ]
    return data


def ptable_from_dict(data: dict) -> PTable:
    pairs = tuple((int(a), int(b)) for a, b in data["pairs"])
    return PTable(pairs, TableSource(data["source"]))


def ptable_to_json(table: PTable, alpha: Optional[QuadraticNumber] = None) -> str:
    return json.dumps(ptable_to_dict(table, alpha), indent=2)


def ptable_from_json(text: str) -> PTable:
    return ptable_from_dict(json.loads(text))


def positions_to_csv(positions: Set[Position]) -> str:
    buf = io.StringIO()
    buf.write(f"# {SCHEMA} oracle\n")
    writer = csv.writer(buf)
    writer.writerow(["x", "y"])
    for x, y in sorted(positions):
        writer.writerow([x, y])
    return buf.getvalue()


def positions_to_json(positions: Set[Position], bound: int) -> str:
    return json.dumps(
        {
            "schema": SCHEMA,
            "kind": "oracle",
            "bound": bound,
            "positions": [list(p) for p in sorted(positions)],
        },
        indent=2,
    )


def oracle_table(positions: Set[Position], limit: Optional[int] = None) -> PTable:
    """Sort an oracle P-set into table form (P-pairs have distinct smaller piles)."""
    pairs = [(int(x), int(y)) for x, y in sorted(positions)]
    if limit is not None:
        pairs = pairs[:limit]
    return PTable(tuple(pairs), TableSource.ORACLE)
