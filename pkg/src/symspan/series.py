"""Truncated power series attached to partitions.

The coefficient of q^N in

    f_lam(q) = 1 / ((1 - q^lam_1) ... (1 - q^lam_k))

counts nonnegative solutions of lam_1 x_1 + ... + lam_k x_k = N, which is the
value of the character of S^N V on a permutation of cycle type lam. A row of
the character table's column generating functions is therefore a knapsack
count, built one part at a time.

Truncation soundness
--------------------
Fix n >= 1 and put T = n(n-1)/2. Every f_lam with lam |- n equals
A_lam(q) / Delta(q), Delta(q) = (1-q)(1-q^2)...(1-q^n), where
A_lam = Delta / prod(1 - q^lam_i) is a polynomial of degree
n(n+1)/2 - n = T. For a rational combination S = sum a_lam f_lam the numerator
A = sum a_lam A_lam has degree <= T and A = S * Delta. Delta has constant
term 1, so if the coefficients of S vanish in degrees 0..T then A vanishes
mod q^(T+1), hence A = 0 and S = 0. Consequently truncating every row at
degree T is injective on span{f_lam}: the rank of the truncated matrix is
exactly dim span{f_lam}, and a combination whose truncated row is zero is a
true identity of rational functions.

The same holds for the elementary specializations below, since
e_lam(1,q,q^2,...) * Delta is q^d(lam) times a q-multinomial coefficient and
has degree d(lam) + n(n+1)/2 - sum lam_i(lam_i+1)/2 = T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .partitions import Partition, d_statistic

__all__ = [
    "TruncatedSeries",
    "CyclotomicProfile",
    "truncation_degree",
    "series_row",
    "series_modular_row",
    "cyclotomic_profile",
    "elementary_specialization_row",
    "is_prime",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact integer coefficients c_0..c_T of a power series."""

    coeffs: tuple[int, ...]

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def order(self) -> int | None:
        """Exponent of the first nonzero term, or None if all zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None


@dataclass(frozen=True)
class CyclotomicProfile:
    """Multiplicity of Phi_j in the denominator of f_lam, for 1 <= j <= n."""

    n: int
    multiplicities: dict[int, int]

    def __getitem__(self, j: int) -> int:
        return self.multiplicities[j]


def truncation_degree(n: int) -> int:
    """T = n(n-1)/2; see the module docstring for why this degree suffices."""
    if n < 1:
        raise ValueError("truncation degree is defined for n >= 1")
    return n * (n - 1) // 2


def _divide_by_one_minus(c: list[int], stride: int) -> None:
    # In place: c <- c / (1 - q^stride), i.e. running sum with step `stride`.
    for i in range(stride, len(c)):
        c[i] += c[i - stride]


def series_row(lam: Partition | Iterable[int], T: int) -> TruncatedSeries:
    """Coefficients 0..T of f_lam(q).

    c_N is the number of solutions of sum lam_i x_i = N with x_i >= 0.
    The empty partition gives the constant series 1.
    """
    if T < 0:
        raise ValueError("T must be nonnegative")
    c = [1] + [0] * T
    for a in lam:
        _divide_by_one_minus(c, a)
    return TruncatedSeries(tuple(c))


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for p < 3.3e24."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


# Residues stay below 2^31 so stride-wise cumulative sums of length <= 2^32
# cannot overflow int64.
_MAX_MODULUS = 1 << 31


def series_modular_row(lam: Partition | Iterable[int], T: int, p: int) -> np.ndarray:
    """`series_row(lam, T)` reduced mod the odd prime `p`, as an int64 array."""
    if T < 0:
        raise ValueError("T must be nonnegative")
    if p <= 2 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    if p >= _MAX_MODULUS:
        raise ValueError(f"modulus must be below 2^31, got {p}")
    c = np.zeros(T + 1, dtype=np.int64)
    c[0] = 1
    for a in lam:
        if a > T:
            continue
        # Pad to a multiple of the stride; each column of the reshaped
        # view is one residue class mod a, summed cumulatively.
        blocks = -(-(T + 1) // a)
        buf = np.zeros(blocks * a, dtype=np.int64)
        buf[: T + 1] = c
        buf = np.cumsum(buf.reshape(blocks, a), axis=0) % p
        c = buf.reshape(-1)[: T + 1]
    return c


def cyclotomic_profile(lam: Partition) -> CyclotomicProfile:
    """Number of parts of `lam` divisible by j, for each 1 <= j <= |lam|."""
    parts = tuple(lam)
    if not parts:
        raise ValueError("profile needs a nonempty partition")
    n = sum(parts)
    return CyclotomicProfile(
        n, {j: sum(1 for a in parts if a % j == 0) for j in range(1, n + 1)}
    )


def elementary_specialization_row(lam: Partition, T: int) -> TruncatedSeries:
    """Coefficients 0..T of e_lam(1, q, q^2, ...).

    This is q^d(lam) / prod_i (1-q)(1-q^2)...(1-q^lam_i); the first nonzero
    coefficient sits exactly at degree d(lam).
    """
    d = d_statistic(lam)
    if T < d:
        raise ValueError(f"T={T} is below d(lam)={d}; row would vanish")
    c = [0] * (T + 1)
    c[d] = 1
    for a in lam:
        for j in range(1, a + 1):
            _divide_by_one_minus(c, j)
    return TruncatedSeries(tuple(c))
