"""Unsigned Stirling numbers of the first kind and the estimates built on them.

Every exact value is a Python ``int``; floating point only appears in the
ratio/constant estimates and in the inequality scans, where the big-integer
quotient is formed before converting.
"""
from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "ConsistencyError",
    "StirlingTable",
    "ConstantsEstimate",
    "InequalityCheck",
    "InequalityReport",
    "stirling_recurrence",
    "stirling_series",
    "stirling_harmonic_k2",
    "signed_stirling",
    "ratio",
    "estimate_constants",
    "harmonic_bounds_check",
    "log_power_sum_check",
    "stirling_record",
]

#: absolute slack for the non-strict floating comparisons
TOLERANCE = 1e-9


class ConsistencyError(ArithmeticError):
    """Two exact routes to the same quantity disagreed."""


class StirlingTable:
    """Row-memoized table of ``[n k]``.

    Rows are appended under a lock and never mutated afterwards, so lookups of
    already-filled rows need no synchronisation.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _fill(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                m = len(rows)
                prev = rows[-1]
                # [m j] = [m-1 j-1] + (m-1) [m-1 j]; prev has length m
                row = [0] * (m + 1)
                for j in range(1, m + 1):
                    left = prev[j - 1]
                    right = prev[j] if j < m else 0
                    row[j] = left + (m - 1) * right
                rows.append(tuple(row))

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        if n >= len(self._rows):
            self._fill(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError(f"arguments must be non-negative, got ({n}, {k})")
        if k > n:
            return 0
        return self.row(n)[k]

    def __len__(self) -> int:
        return len(self._rows)


_TABLE = StirlingTable()


def stirling_recurrence(n: int, k: int) -> int:
    """``[n k]`` from the two-term recurrence, memoized in a shared table."""
    return _TABLE(n, k)


def _falling(top: int, count: int) -> int:
    out = 1
    for i in range(count):
        out *= top - i
    return out


@lru_cache(maxsize=None)
def _series(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    # sum_{r=k-1}^{n-1} (n-1)!/r! * [r, k-1]
    total = 0
    for r in range(k - 1, n):
        total += _falling(n - 1, n - 1 - r) * _series(r, k - 1)
    return total


def stirling_series(n: int, k: int) -> int:
    """``[n k]`` from the telescoped series.

    The inner ``[r, k-1]`` terms come from the series itself (down to
    ``[r, 0]``), so this route never touches the recurrence table.
    """
    if n < 1 or k < 1:
        raise ValueError(f"stirling_series needs n >= 1 and k >= 1, got ({n}, {k})")
    return _series(n, k)


def stirling_harmonic_k2(n: int) -> int:
    """``(n-1)! * H_{n-1}`` in exact rational arithmetic."""
    if n < 2:
        raise ValueError(f"stirling_harmonic_k2 needs n >= 2, got {n}")
    harmonic = sum((Fraction(1, r) for r in range(1, n)), Fraction(0))
    value = math.factorial(n - 1) * harmonic
    if value.denominator != 1:
        raise ConsistencyError(f"(n-1)! H_(n-1) is not integral at n={n}: {value}")
    return value.numerator


def signed_stirling(n: int, k: int) -> int:
    value = stirling_recurrence(n, k)
    return -value if (n - k) % 2 else value


def ratio(n: int, k: int) -> float:
    """``[n k] / ((n-1)! (ln n)^(k-1))`` as a float.

    The integer quotient ``[n k] / (n-1)!`` is correctly rounded by Python's
    big-int true division, so nothing overflows even at n in the hundreds.
    """
    if n < 2:
        raise ValueError(f"ratio needs n >= 2, got {n}")
    if k < 1 or n < k:
        raise ValueError(f"ratio needs 1 <= k <= n, got ({n}, {k})")
    quotient = stirling_recurrence(n, k) / math.factorial(n - 1)
    return quotient / math.log(n) ** (k - 1)


@dataclass(frozen=True)
class ConstantsEstimate:
    """Observed bracket ``alpha_hat <= ratio(n, k) <= beta_hat`` over a finite range."""

    k: int
    n_range: tuple[int, int]
    alpha_hat: float
    beta_hat: float
    alpha_at: int
    beta_at: int
    ratios: tuple[float, ...] = field(repr=False, default=())

    def brackets(self, value: float) -> bool:
        return self.alpha_hat <= value <= self.beta_hat

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "n_min": self.n_range[0],
            "n_max": self.n_range[1],
            "alpha_hat": self.alpha_hat,
            "alpha_at": self.alpha_at,
            "beta_hat": self.beta_hat,
            "beta_at": self.beta_at,
        }


def _scan(fn, values, threads: int) -> list:
    if threads <= 1:
        return [fn(v) for v in values]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, values))


def estimate_constants(k: int, n_min: int, n_max: int, threads: int = 1) -> ConstantsEstimate:
    if k < 2:
        raise ValueError(f"estimate_constants needs k >= 2, got {k}")
    if n_min < max(k, 2):
        raise ValueError(f"n_min must be at least max(k, 2) = {max(k, 2)}, got {n_min}")
    if n_max <= n_min:
        raise ValueError(f"empty range [{n_min}, {n_max}]")
    # fill the table once, single-threaded, before concurrent reads
    stirling_recurrence(n_max, k)
    ns = range(n_min, n_max + 1)
    values = _scan(lambda n: ratio(n, k), ns, threads)
    lo = min(range(len(values)), key=values.__getitem__)
    hi = max(range(len(values)), key=values.__getitem__)
    return ConstantsEstimate(
        k=k,
        n_range=(n_min, n_max),
        alpha_hat=values[lo],
        beta_hat=values[hi],
        alpha_at=ns[lo],
        beta_at=ns[hi],
        ratios=tuple(values),
    )


@dataclass(frozen=True)
class InequalityCheck:
    """One inequality scanned over ``n_range``.

    ``threshold`` is the smallest n such that the inequality holds for every
    scanned n from there on, or ``None`` if it fails at the top of the range.
    """

    name: str
    threshold: int | None
    failures: int
    last_failure: int | None

    @property
    def found(self) -> bool:
        return self.threshold is not None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "threshold": self.threshold,
            "failures": self.failures,
            "last_failure": self.last_failure,
        }


@dataclass(frozen=True)
class InequalityReport:
    kind: str
    n_range: tuple[int, int]
    checks: tuple[InequalityCheck, ...]
    params: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> InequalityCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        out.update(self.params)
        out["n_min"], out["n_max"] = self.n_range
        out["checks"] = [c.as_dict() for c in self.checks]
        return out


def _summarise(name: str, ns: list[int], holds: list[bool]) -> InequalityCheck:
    failed = [n for n, ok in zip(ns, holds) if not ok]
    if not failed:
        threshold = ns[0]
    elif failed[-1] == ns[-1]:
        threshold = None
    else:
        threshold = failed[-1] + 1
    return InequalityCheck(
        name=name,
        threshold=threshold,
        failures=len(failed),
        last_failure=failed[-1] if failed else None,
    )


HARMONIC_INEQUALITIES = (
    "half_log_lt_lower",
    "lower_le_harmonic",
    "harmonic_le_upper",
    "upper_lt_double_log",
)


def harmonic_bounds_check(n_max: int) -> InequalityReport:
    """Scan ``ln n / 2 < ln(n-1) + 1/(n-1) <= H_{n-1} <= ln(n-1) + 1 < 2 ln n``.

    Each link of the chain is reported separately, for n in ``[2, n_max]``.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    ns = list(range(2, n_max + 1))
    results: list[list[bool]] = [[], [], [], []]
    harmonic = 0.0
    for n in ns:
        harmonic += 1.0 / (n - 1)
        log_n = math.log(n)
        log_m = math.log(n - 1)
        lower = log_m + 1.0 / (n - 1)
        upper = log_m + 1.0
        results[0].append(log_n / 2 < lower)
        results[1].append(lower <= harmonic + TOLERANCE)
        results[2].append(harmonic <= upper + TOLERANCE)
        results[3].append(upper < 2 * log_n)
    checks = tuple(_summarise(name, ns, r) for name, r in zip(HARMONIC_INEQUALITIES, results))
    return InequalityReport("harmonic_bounds", (2, n_max), checks)


def log_power_sum_check(m: int, n_max: int) -> InequalityReport:
    """Scan ``ln^(m+1) n / (2(m+1)) < S < 2 ln^(m+1) n / (m+1)``.

    ``S(m, n) = sum_{r=1}^{n-1} ln^m r / r``. Reports the lower bound, the
    upper bound and the two together; a missing threshold is a finding, not
    an error.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if n_max < 10:
        raise ValueError(f"n_max must be at least 10, got {n_max}")
    ns = list(range(2, n_max + 1))
    lower_ok: list[bool] = []
    upper_ok: list[bool] = []
    total = 0.0
    for n in ns:
        r = n - 1
        total += math.log(r) ** m / r
        power = math.log(n) ** (m + 1)
        lower_ok.append(power / (2 * (m + 1)) < total)
        upper_ok.append(total < 2 * power / (m + 1))
    both = [a and b for a, b in zip(lower_ok, upper_ok)]
    checks = (
        _summarise("lower", ns, lower_ok),
        _summarise("upper", ns, upper_ok),
        _summarise("both", ns, both),
    )
    return InequalityReport("log_power_sum", (2, n_max), checks, params={"m": m})


def log_power_sum(m: int, n: int) -> float:
    return math.fsum(math.log(r) ** m / r for r in range(1, n))


def stirling_record(n: int, k: int) -> dict:
    """Serializable record; the value travels as a decimal string."""
    value = stirling_recurrence(n, k)
    try:
        rho = ratio(n, k)
    except ValueError:
        rho = None
    return {"n": n, "k": k, "value": str(value), "ratio": rho}
