"""Ballot numbers f(n, k), their q-analogues, and q-Catalan polynomials.

f(n, k | q) enumerates lattice paths from (0,0) to (n+1, k) that end with
an east step and never rise above the diagonal y = x, weighted by q^A where
A is the number of unit cells below the path and above the x-axis
(equivalently, the sum of the heights of the east steps).  The polynomials
satisfy

    f(n, k | q) = q f(n, k-1 | q) + q^k f(n-1, k | q),

with f(n, 0 | q) = 1 and f(n, k | q) = 0 for k > n.  Everything else in
this module is a reading of the same table: column sums give the q-Catalan
polynomials, the reversed statistic A' (cells between the path and the
staircase ceiling min(y=x, y=k)) gives the tilde family.

Exhaustive path enumeration is kept alongside the recurrence as an
independent oracle; it is capped (default n + k <= 26, override with the
QBALLOT_PATH_CAP environment variable) because the number of paths grows
like a Catalan number.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .qlaurent import ONE, ZERO, BigRat, ExactnessError, QLaurent
from .qcore import gauss_binom, q_int
from .report import CheckResult, SuiteReport

DEFAULT_PATH_CAP = 26


def path_cap() -> int:
    """Current cap on n + k for exhaustive path enumeration."""
    raw = os.environ.get("QBALLOT_PATH_CAP")
    if raw is None:
        return DEFAULT_PATH_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"QBALLOT_PATH_CAP must be an integer, got {raw!r}") from None


def ballot(n: int, k: int) -> BigRat:
    """The ballot number (n-k+1)/(n+1) * C(n+k, k); an integer for 0 <= k <= n."""
    if n < 0 or k < 0:
        raise ValueError("ballot needs n, k >= 0")
    if k > n:
        return Fraction(0)
    return Fraction((n - k + 1) * comb(n + k, k), n + 1)


class BallotTable:
    """Memoized table of f(n, k | q), safe for concurrent readers.

    Writes happen under a single lock; completed entries are immutable
    QLaurent values, so handing them out without the lock is safe.
    """

    def __init__(self) -> None:
        self._entries: dict[tuple[int, int], QLaurent] = {}
        self._lock = threading.Lock()

    def get(self, n: int, k: int) -> QLaurent:
        if n < 0 or k < 0:
            raise ValueError("qballot needs n, k >= 0")
        if k > n:
            return ZERO
        key = (n, k)
        hit = self._entries.get(key)
        if hit is not None:
            return hit
        with self._lock:
            return self._fill(n, k)

    def _fill(self, n: int, k: int) -> QLaurent:
        t = self._entries
        for m in range(n + 1):
            for j in range(min(m, k) + 1):
                if (m, j) in t:
                    continue
                if j == 0:
                    t[(m, j)] = ONE
                    continue
                left = t[(m, j - 1)]
                up = t.get((m - 1, j), ZERO)
                t[(m, j)] = left.shifted(1) + up.shifted(j)
        return t[(n, k)]

    def known(self) -> dict[tuple[int, int], QLaurent]:
        with self._lock:
            return dict(self._entries)

    # -- persistence (CLI --cache) --------------------------------------------

    SCHEMA = "qballot-table-v1"

    def dump_json(self) -> dict:
        entries = {f"{n},{k}": p.to_json() for (n, k), p in sorted(self.known().items())}
        return {"schema": self.SCHEMA, "entries": entries}

    def load_json(self, data: dict) -> int:
        if data.get("schema") != self.SCHEMA:
            raise ValueError(f"unrecognized cache schema: {data.get('schema')!r}")
        loaded = 0
        with self._lock:
            for key, poly in data["entries"].items():
                n_s, k_s = key.split(",")
                self._entries[(int(n_s), int(k_s))] = QLaurent.from_json(poly)
                loaded += 1
        return loaded

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.dump_json(), fh, separators=(",", ":"), sort_keys=True)

    def load(self, path: str) -> int:
        with open(path) as fh:
            return self.load_json(json.load(fh))


TABLE = BallotTable()


def qballot(n: int, k: int) -> QLaurent:
    """f(n, k | q) by the two-term recurrence, memoized in the shared table."""
    return TABLE.get(n, k)


# -- exhaustive path oracles --------------------------------------------------


def _check_cap(total: int, cap: Optional[int]) -> None:
    limit = path_cap() if cap is None else cap
    if total > limit:
        raise ValueError(
            f"path enumeration refused: n+k={total} exceeds cap {limit} "
            "(set QBALLOT_PATH_CAP to raise it)"
        )


def qballot_paths(n: int, k: int, cap: Optional[int] = None) -> QLaurent:
    """f(n, k | q) by brute-force enumeration of paths, weighted by area below."""
    if n < 0 or k < 0:
        raise ValueError("qballot_paths needs n, k >= 0")
    _check_cap(n + k, cap)
    if k > n:
        return ZERO
    counts: dict[int, int] = {}
    # Enumerate prefixes to (n, k); the forced final east step adds k cells.
    stack = [(0, 0, k)]
    while stack:
        x, y, area = stack.pop()
        if x == n and y == k:
            counts[area] = counts.get(area, 0) + 1
            continue
        if x < n:
            stack.append((x + 1, y, area + y))
        if y < k and y + 1 <= x:
            stack.append((x, y + 1, area))
    return QLaurent(counts)


def tilde_f_paths(m: int, n: int, cap: Optional[int] = None) -> QLaurent:
    """Sum of q^A' over the same paths, A' counting cells above the path and
    below both y = x and y = n.  Independent of the reversal formula."""
    if m < n or n < 0:
        raise ValueError("tilde_f_paths needs m >= n >= 0")
    _check_cap(m + n, cap)
    counts: dict[int, int] = {}
    stack = [(0, 0, 0)]
    while stack:
        x, y, area = stack.pop()
        if x == m and y == n:
            counts[area] = counts.get(area, 0) + 1
            continue
        if x < m:
            stack.append((x + 1, y, area + min(x, n) - y))
        if y < n and y + 1 <= x:
            stack.append((x, y + 1, area))
    return QLaurent(counts)


# -- reversal and Catalan families --------------------------------------------


def tilde_f(m: int, n: int) -> QLaurent:
    """q^((m-n)n + C(n+1,2)) f(m, n | 1/q); the generating polynomial of A'."""
    if m < n or n < 0:
        raise ValueError("tilde_f needs m >= n >= 0")
    shift = (m - n) * n + comb(n + 1, 2)
    return qballot(m, n).subs_q_inverse().shifted(shift)


def qcatalan(n: int) -> QLaurent:
    """C_n(q): the area q-Catalan polynomial, C_0 = C_1 = 1.

    Computed both as sum_k f(n-1, k | q) and as q^-n f(n, n | q); the two
    must agree, and disagreement is an internal error.
    """
    if n < 0:
        raise ValueError("qcatalan needs n >= 0")
    if n == 0:
        return ONE
    by_sum = ZERO
    for k in range(n):
        by_sum = by_sum + qballot(n - 1, k)
    by_diag = qballot(n, n).shifted(-n)
    if by_sum != by_diag:
        raise ExactnessError(f"q-Catalan routes disagree at n={n}")
    return by_sum


def tilde_qcatalan(n: int) -> QLaurent:
    """The reversal q^(C(n,2)) C_n(1/q); equals tilde_f(n, n)."""
    if n < 0:
        raise ValueError("tilde_qcatalan needs n >= 0")
    return qcatalan(n).subs_q_inverse().shifted(comb(n, 2))


# -- convolution identities ---------------------------------------------------


def verify_carlitz_convolution(maxn: int) -> SuiteReport:
    """Check both convolution recurrences for C_{n+1} for all n < maxn."""
    rep = SuiteReport("carlitz")
    for n in range(maxn):
        lhs = qcatalan(n + 1)
        rhs = ZERO
        for i in range(n + 1):
            rhs = rhs + (qcatalan(i) * qcatalan(n - i)).shifted((i + 1) * (n - i))
        rep.results.append(
            CheckResult(
                "convolution-area",
                n + 1,
                None,
                lhs == rhs,
                None if lhs == rhs else f"lhs={lhs} rhs={rhs}",
            )
        )
        lhs_t = tilde_qcatalan(n + 1)
        rhs_t = ZERO
        for i in range(n + 1):
            rhs_t = rhs_t + (tilde_qcatalan(i) * tilde_qcatalan(n - i)).shifted(i)
        rep.results.append(
            CheckResult(
                "convolution-reversed",
                n + 1,
                None,
                lhs_t == rhs_t,
                None if lhs_t == rhs_t else f"lhs={lhs_t} rhs={rhs_t}",
            )
        )
    return rep


# -- the hypergeometric-recurrence transcription ------------------------------

ANDREWS_READINGS = (
    "literal",
    "reversed-catalan",
    "inverse-catalan",
    "lowered-exponent",
)


def _andrews_rhs(n: int, catalan, exp_drop: int = 0, tail_power: int = 1) -> QLaurent:
    # q^n [2n, n] / [n+1] is an exact polynomial division (the classical
    # q-Catalan), so a genuine Laurent polynomial always comes out.
    from .qlaurent import ql_divexact

    head = ql_divexact(gauss_binom(2 * n, n).shifted(n), q_int(n + 1))
    tail = ZERO
    for j in range(n):
        term = (ONE - QLaurent.monomial(n - j)) * gauss_binom(2 * j + 1, j)
        term = term.shifted((n + 1 - j) * j - exp_drop * j)
        tail = tail + term * catalan(n - 1 - j)
    return head + tail.shifted(tail_power)


def andrews_check(maxn: int, readings: Iterable[str] = ("literal",)) -> SuiteReport:
    """Compare C_n(q) against the transcribed hypergeometric recurrence.

    The literal transcription does not hold (n = 1 already gives 2q - q^2
    against C_1 = 1), so this suite only reports; it never repairs the
    formula.  Alternate readings can be requested explicitly: two swap the
    Catalan normalization, and "lowered-exponent" drops the stray q^(j+1)
    from each summand (that variant does hold; see README).
    """
    rep = SuiteReport("andrews", mode="report")
    for reading in readings:
        if reading not in ANDREWS_READINGS:
            raise ValueError(f"unknown reading {reading!r}; choose from {ANDREWS_READINGS}")
        for n in range(1, maxn + 1):
            if reading == "literal":
                lhs = qcatalan(n)
                rhs = _andrews_rhs(n, qcatalan)
            elif reading == "reversed-catalan":
                lhs = tilde_qcatalan(n)
                rhs = _andrews_rhs(n, tilde_qcatalan)
            elif reading == "inverse-catalan":
                # 1/q-reversed factors inside the sum only
                lhs = qcatalan(n)
                rhs = _andrews_rhs(n, lambda m: qcatalan(m).subs_q_inverse())
            else:  # lowered-exponent: q^((n-j)j) on the summand, no overall q
                lhs = qcatalan(n)
                rhs = _andrews_rhs(n, qcatalan, exp_drop=1, tail_power=0)
            ok = lhs == rhs
            rep.results.append(
                CheckResult(
                    f"andrews-{reading}",
                    n,
                    None,
                    ok,
                    None if ok else f"lhs={lhs} rhs={rhs}",
                    asserted=False,
                )
            )
    return rep
