"""lcm(1..n) against Landau's function g(n), the largest element order in S_n."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .numtheory import lcm, primes_upto

TABLE_CAP = 200


@dataclass(frozen=True)
class LandauRow:
    n: int
    lcm_value: int
    g_value: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.lcm_value, self.g_value)


def lcm_upto(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1
    for k in range(2, n + 1):
        out = lcm(out, k)
    return out


def landau_g(n: int) -> int:
    """Maximum lcm over partitions of n.

    Knapsack over primes: each prime contributes at most one power p**k,
    costing p**k points; leftover points become fixed 1-cycles.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > TABLE_CAP:
        raise ValueError(f"n = {n} exceeds the table cap {TABLE_CAP}")
    best = [1] * (n + 1)
    for p in primes_upto(n):
        powers = []
        q = p
        while q <= n:
            powers.append(q)
            q *= p
        for m in range(n, 1, -1):
            top = best[m]
            for q in powers:
                if q > m:
                    break
                cand = best[m - q] * q
                if cand > top:
                    top = cand
            best[m] = top
    return best[n]


def landau_table(max_n: int) -> list[LandauRow]:
    rows = []
    for n in range(1, max_n + 1):
        L, g = lcm_upto(n), landau_g(n)
        if L % g:
            raise AssertionError(f"g({n}) = {g} does not divide lcm = {L}")
        rows.append(LandauRow(n, L, g))
    return rows


def table_csv(rows: list[LandauRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "lcm", "g", "ratio_num", "ratio_den"])
    for r in rows:
        w.writerow([r.n, r.lcm_value, r.g_value, r.ratio.numerator, r.ratio.denominator])
    return buf.getvalue()
