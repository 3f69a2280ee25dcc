"""Upper and lower bounds for D(n).

Upper: the cyclotomic recursion U(n). Lower: the chain
E(n) >= G(n) >= H(n) built from d(lam) = sum binom(lam_i, 2) and the greedy
triangular decomposition nu(m). All arithmetic is on exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Mapping, Sequence

from .partitions import count_partitions, d_statistic, euler_phi, iter_partitions

__all__ = [
    "InternalLimitError",
    "GreedyDecomposition",
    "BoundsRecord",
    "NuReport",
    "AsymptoticsRow",
    "AsymptoticsReport",
    "largest_k",
    "nu",
    "compute_U",
    "d_values",
    "compute_E",
    "compute_G",
    "compute_H",
    "nu_within_bound",
    "check_nu_inequality",
    "max_nu_below",
    "gap_statistic",
    "bounds_record",
    "bounds_table",
    "asymptotics_probe",
    "d_vs_next_e",
]

NU_CHECK_START = 405


class InternalLimitError(RuntimeError):
    """A scan ran past a bound that should be unreachable."""


@dataclass(frozen=True)
class GreedyDecomposition:
    m: int
    ks: tuple[int, ...]

    @property
    def nu(self) -> int:
        return sum(self.ks)

    def __str__(self) -> str:
        if not self.ks:
            return f"{self.m} = 0, nu=0"
        terms = "+".join(f"C({k},2)" for k in self.ks)
        return f"{self.m} = {terms}, ν={self.nu}"


def largest_k(m: int) -> int:
    """Largest k with binom(k, 2) <= m, i.e. floor((1 + sqrt(8m+1)) / 2)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return (1 + isqrt(8 * m + 1)) // 2


def nu(m: int) -> GreedyDecomposition:
    """Greedy decomposition m = sum binom(k_i, 2), each k_i as large as possible.

    >>> nu(26).ks
    (7, 3, 2, 2)
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    ks = []
    rest = m
    while rest:
        k = largest_k(rest)
        ks.append(k)
        rest -= k * (k - 1) // 2
    return GreedyDecomposition(m, tuple(ks))


def compute_U(n_max: int) -> list[int]:
    """[U(0), ..., U(n_max)] from the cyclotomic recursion with U(0) = 1."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    U = [1]
    for n in range(1, n_max + 1):
        drop = sum(max(0, euler_phi(j) - U[n - j * (n // j)]) for j in range(1, n + 1))
        U.append(n * (n - 1) // 2 + 1 - drop)
    return U


@lru_cache(maxsize=64)
def d_values(n: int) -> frozenset[int]:
    """{d(lam) : lam |- n}."""
    return frozenset(d_statistic(p) for p in iter_partitions(n))


def compute_E(n: int) -> int:
    """Number of distinct d(lam) over lam |- n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return len(d_values(n))


def compute_G(n: int) -> int:
    """One less than the least positive integer that is not a d(lam)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    values = d_values(n)
    m = 1
    while m in values:
        m += 1
    return m - 1


def compute_H(n: int) -> int:
    """Largest N with nu(m) <= n for every m <= N."""
    if n < 1:
        raise ValueError("n must be >= 1")
    limit = n * n + 1
    m = 1
    while nu(m).nu <= n:
        m += 1
        if m > limit:
            raise InternalLimitError(f"H({n}) scan passed m = {limit}")
    return m - 1


def _iroot4(x: int) -> int:
    return isqrt(isqrt(x))


def nu_within_bound(value: int, m: int) -> bool:
    """Decide ``value <= sqrt(2m) + 3 m^(1/4)`` exactly.

    Both roots are bracketed by integer floors at scale 2^K; K grows until
    the bracket separates `value` from the bound.
    """
    if m < 1:
        raise ValueError("m must be positive")
    K = 32
    while K <= 1 << 14:
        s = 1 << K
        lo = isqrt(2 * m * s * s) + 3 * _iroot4(m * s**4)
        # lo <= s * bound < lo + 4
        if value * s <= lo:
            return True
        if value * s >= lo + 4:
            return False
        K *= 2
    raise InternalLimitError(f"could not separate {value} from the bound at m={m}")


@dataclass
class NuReport:
    m_lo: int
    m_hi: int
    violations: list[int] = field(default_factory=list)
    min_slack: float = float("inf")
    min_slack_at: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def check_nu_inequality(m_lo: int, m_hi: int) -> NuReport:
    """Check nu(m) <= sqrt(2m) + 3 m^(1/4) for m_lo <= m <= m_hi.

    Pass/fail per m is decided in exact integer arithmetic; the slack
    figures are floats and only informative.
    """
    if m_lo < NU_CHECK_START:
        raise ValueError(f"the inequality is only claimed for m >= {NU_CHECK_START}")
    if m_hi < m_lo:
        raise ValueError("empty range")
    report = NuReport(m_lo, m_hi)
    for m in range(m_lo, m_hi + 1):
        v = nu(m).nu
        if not nu_within_bound(v, m):
            report.violations.append(m)
        slack = (2 * m) ** 0.5 + 3 * m**0.25 - v
        if slack < report.min_slack:
            report.min_slack, report.min_slack_at = slack, m
    return report


def max_nu_below(m_bound: int) -> tuple[int, int]:
    """(max nu(m), argmax) over 0 <= m < m_bound; ties go to the largest m."""
    best, where = -1, -1
    for m in range(m_bound):
        v = nu(m).nu
        if v >= best:
            best, where = v, m
    return best, where


def gap_statistic(n: int, D_values: Mapping[int, int]) -> int:
    """Slack of the D-based cyclotomic bound at n, evaluated with exact D values.

    -D(n) + n(n-1)/2 + 1 - sum_j max(0, phi(j) - D(n - j*floor(n/j))).
    `D_values` must contain n and every residue n mod j (including D(0) = 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    needed = {n} | {n - j * (n // j) for j in range(1, n + 1)}
    missing = sorted(k for k in needed if k not in D_values)
    if missing:
        raise ValueError(f"missing D values for {missing}")
    drop = sum(max(0, euler_phi(j) - D_values[n - j * (n // j)]) for j in range(1, n + 1))
    return -D_values[n] + n * (n - 1) // 2 + 1 - drop


@dataclass
class BoundsRecord:
    n: int
    U: int
    E: int
    G: int
    H: int
    P: int
    eq2: int
    D: int | None = None
    D_method: str | None = None

    def chain_violations(self) -> list[str]:
        """Failed links of H <= G <= E <= D <= U <= n(n-1)/2 + 1."""
        chain = [("H", self.H), ("G", self.G), ("E", self.E)]
        if self.D is not None:
            chain.append(("D", self.D))
        chain += [("U", self.U), ("eq2", self.eq2)]
        return [
            f"n={self.n}: {a}={x} > {b}={y}"
            for (a, x), (b, y) in zip(chain, chain[1:])
            if x > y
        ]


def bounds_record(n: int, U: Sequence[int] | None = None, D: int | None = None,
                  D_method: str | None = None) -> BoundsRecord:
    if U is None:
        U = compute_U(n)
    return BoundsRecord(
        n=n,
        U=U[n],
        E=compute_E(n),
        G=compute_G(n),
        H=compute_H(n),
        P=count_partitions(n),
        eq2=n * (n - 1) // 2 + 1,
        D=D,
        D_method=D_method,
    )


def bounds_table(n_max: int, D_values: Mapping[int, int] | None = None,
                 D_method: str | None = None) -> list[BoundsRecord]:
    """One record per n = 1..n_max; D filled in where `D_values` has it."""
    U = compute_U(n_max)
    D_values = D_values or {}
    return [
        bounds_record(n, U, D_values.get(n), D_method if n in D_values else None)
        for n in range(1, n_max + 1)
    ]


@dataclass(frozen=True)
class AsymptoticsRow:
    n: int
    H: int
    U: int
    h_ratio: float
    u_ratio: float
    c_hat: float


@dataclass(frozen=True)
class AsymptoticsReport:
    rows: tuple[AsymptoticsRow, ...]

    @property
    def max_c_hat(self) -> float:
        return max(r.c_hat for r in self.rows)


def asymptotics_probe(n_max: int) -> AsymptoticsReport:
    """H(n)/(n^2/2), U(n)/(n^2/2) and (n^2/2 - H(n)) / n^1.5 for n = 2..n_max.

    Evidence only; nothing is asserted.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    U = compute_U(n_max)
    rows = []
    for n in range(2, n_max + 1):
        half = n * n / 2
        H = compute_H(n)
        rows.append(AsymptoticsRow(n, H, U[n], H / half, U[n] / half, (half - H) / n**1.5))
    return AsymptoticsReport(tuple(rows))


def d_vs_next_e(D_values: Mapping[int, int]) -> dict[int, int]:
    """D(n) - E(n+1) for every n in `D_values` with n >= 1."""
    return {n: D - compute_E(n + 1) for n, D in sorted(D_values.items()) if n >= 1}
