"""Rank and row relations of the partition-by-coefficient matrix.

Row lam of the matrix holds the coefficients 0..T of f_lam, T = n(n-1)/2.
Its rank over Q is D(n). The entries are integers, so rank over Q equals rank
over C, and the truncation at T loses nothing (see :mod:`symspan.series`).

Two rank routes are provided. :func:`rank_exact` runs fraction-free
(Bareiss) elimination and is certifying. :func:`rank_modular` streams rows
into an echelon basis mod a few primes; every per-prime rank is a proven
lower bound for the rational rank, and agreement between primes is the usual
evidence that the bound is attained.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from math import comb, gcd
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition, count_partitions, enumerate_partitions
from .series import is_prime, series_modular_row, series_row, truncation_degree

__all__ = [
    "DEFAULT_PRIMES",
    "MemoryBudgetError",
    "CoefficientMatrix",
    "ModularRank",
    "RelationCertificate",
    "estimate_matrix_bytes",
    "build_matrix",
    "rank_exact",
    "rank_modular",
    "nullspace_certificates",
    "verify_certificate",
    "in_span",
]

# The two smallest primes above 2^20.
DEFAULT_PRIMES = (1048583, 1048589)
_MIN_PRIME = 1 << 20


class MemoryBudgetError(MemoryError):
    """Raised when a matrix would exceed the configured memory budget."""


@dataclass(frozen=True)
class CoefficientMatrix:
    n: int
    row_index: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def T(self) -> int:
        return len(self.entries[0]) - 1

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.entries[self.row_index.index(lam)]


def estimate_matrix_bytes(n: int) -> int:
    """Rough footprint of the exact matrix for `n`, in bytes.

    Uses the largest entry, which is the coefficient of q^T in 1/(1-q)^n,
    and CPython's per-int overhead.
    """
    T = truncation_degree(n)
    biggest = comb(T + n - 1, n - 1)
    per_entry = 28 + 4 * (biggest.bit_length() // 30 + 1)
    return count_partitions(n) * (T + 1) * per_entry


def build_matrix(n: int, memory_budget_mib: float | None = None) -> CoefficientMatrix:
    """Rows ``series_row(lam, n(n-1)/2)`` for lam |- n, in canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if memory_budget_mib is not None:
        need = estimate_matrix_bytes(n)
        if need > memory_budget_mib * 2**20:
            raise MemoryBudgetError(
                f"n={n} needs about {need / 2**20:.1f} MiB, "
                f"budget is {memory_budget_mib} MiB"
            )
    T = truncation_degree(n)
    index = tuple(enumerate_partitions(n))
    return CoefficientMatrix(n, index, tuple(series_row(lam, T).coeffs for lam in index))


def _bareiss(rows: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination in place on the first `ncols` columns.

    Pivot: the first remaining row (current order) with a nonzero entry in
    the current column; columns left to right. Extra trailing columns are
    carried along, so an identity block appended to the rows records the
    transform. Rows rank..end are zero on the first `ncols` columns on exit.
    """
    nrows = len(rows)
    width = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            ri = rows[i]
            a = ri[c]
            # Every entry is a minor of the input, so the division is exact.
            if a:
                for j in range(c + 1, width):
                    ri[j] = (p * ri[j] - a * pr[j]) // prev
            else:
                for j in range(c + 1, width):
                    if ri[j]:
                        ri[j] = p * ri[j] // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def rank_exact(M: CoefficientMatrix) -> int:
    """Rank over Q of `M`; for ``build_matrix(n)`` this is D(n)."""
    rows = [list(r) for r in M.entries]
    return _bareiss(rows, len(rows[0]))


@dataclass(frozen=True)
class ModularRank:
    n: int
    ranks: dict[int, int]
    rank: int
    status: str  # "consensus" or "inconsistent"

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(self.ranks)

    @property
    def consensus(self) -> bool:
        return self.status == "consensus"


def _check_primes(primes: Sequence[int]) -> None:
    if len(primes) < 2:
        raise ValueError("need at least two primes")
    if len(set(primes)) != len(primes):
        raise ValueError(f"primes must be distinct: {list(primes)}")
    for p in primes:
        if p <= _MIN_PRIME or not is_prime(p):
            raise ValueError(f"{p} is not a prime above 2^20")


def _matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """(A @ B) mod p for residue matrices, exact.

    Runs in float64 over inner-dimension chunks small enough that every
    partial sum stays below 2^53. Moduli too large for that fall back to
    int64 rank-one updates (p < 2^31 keeps each one below 2^63).
    """
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if (p - 1) ** 2 >= 1 << 53:
        for k in range(A.shape[1]):
            out = (out + np.outer(A[:, k], B[k]) % p) % p
        return out
    step = (1 << 53) // ((p - 1) ** 2)
    for k in range(0, A.shape[1], step):
        part = A[:, k:k + step].astype(np.float64) @ B[k:k + step].astype(np.float64)
        out = (out + np.fmod(part, p).astype(np.int64)) % p
    return out


def _streamed_rank_mod(n: int, p: int, batch: int = 256) -> int:
    T = truncation_degree(n)
    # Reduced row echelon basis: pivot entries 1, zero in every other pivot column.
    basis = np.zeros((0, T + 1), dtype=np.int64)
    pivots: list[int] = []
    rows = iter(enumerate_partitions(n))
    while len(pivots) < T + 1:
        chunk = [series_modular_row(lam, T, p) for lam in islice(rows, batch)]
        if not chunk:
            break
        V = np.stack(chunk)
        if pivots:
            V = (V - _matmul_mod(V[:, pivots], basis, p)) % p
        first_new = len(pivots)
        for v in V:
            for i in range(first_new, len(pivots)):
                a = v[pivots[i]]
                if a:
                    v = (v - a * basis[i]) % p
            nz = np.flatnonzero(v)
            if nz.size == 0:
                continue
            col = int(nz[0])
            v = v * pow(int(v[col]), -1, p) % p
            basis = (basis - np.outer(basis[:, col], v)) % p
            basis = np.vstack([basis, v])
            pivots.append(col)
    return len(pivots)


def rank_modular(n: int, primes: Sequence[int] = DEFAULT_PRIMES) -> ModularRank:
    """Rank of the n-th matrix modulo each prime, without building it whole.

    Each per-prime rank is at most the rational rank. If all agree the
    result is flagged ``"consensus"``; otherwise the maximum is returned
    flagged ``"inconsistent"``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    primes = [int(p) for p in primes]
    _check_primes(primes)
    ranks = {p: _streamed_rank_mod(n, p) for p in primes}
    values = set(ranks.values())
    status = "consensus" if len(values) == 1 else "inconsistent"
    return ModularRank(n, ranks, max(values), status)


@dataclass(frozen=True)
class RelationCertificate:
    """Integer relation sum a_lam f_lam = 0 among partitions of `n`.

    `terms` lists (partition, nonzero coefficient) in canonical partition
    order. Certificates built by :func:`make_certificate` are primitive with
    a positive first coefficient.
    """

    n: int
    terms: tuple[tuple[Partition, int], ...]
    verified: bool = False
    normalization: str = field(default="primitive, leading coefficient positive", compare=False)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def to_json_obj(self) -> dict:
        return {
            "terms": [{"partition": list(lam.parts), "coeff": a} for lam, a in self.terms],
            "verified": self.verified,
        }

    @classmethod
    def from_json_obj(cls, n: int, obj: dict) -> "RelationCertificate":
        terms = tuple(
            (Partition.from_parts(t["partition"]), int(t["coeff"])) for t in obj["terms"]
        )
        return cls(n, terms, bool(obj.get("verified", False)))


def _normalize(n: int, coeffs: dict[Partition, int]) -> tuple[tuple[Partition, int], ...]:
    order = {lam: i for i, lam in enumerate(enumerate_partitions(n))}
    terms = sorted(((lam, a) for lam, a in coeffs.items() if a), key=lambda t: order[t[0]])
    if not terms:
        return ()
    g = 0
    for _, a in terms:
        g = gcd(g, a)
    if terms[0][1] < 0:
        g = -g
    return tuple((lam, a // g) for lam, a in terms)


def make_certificate(n: int, coeffs: dict[Partition, int] | Iterable[tuple[Partition, int]]) -> RelationCertificate:
    """Normalize `coeffs` and attach the result of exact verification."""
    coeffs = dict(coeffs)
    for lam in coeffs:
        if lam.n != n:
            raise ValueError(f"{lam} is not a partition of {n}")
    cert = RelationCertificate(n, _normalize(n, coeffs))
    return RelationCertificate(n, cert.terms, verify_certificate(cert))


def verify_certificate(cert: RelationCertificate) -> bool:
    """True iff sum a_lam series_row(lam, n(n-1)/2) is the zero vector.

    By the truncation argument in :mod:`symspan.series` a True result proves
    the rational-function identity sum a_lam f_lam = 0.
    """
    if not cert.terms:
        return False
    n = cert.n
    if any(lam.n != n for lam, _ in cert.terms):
        return False
    T = truncation_degree(n)
    total = [0] * (T + 1)
    for lam, a in cert.terms:
        for i, c in enumerate(series_row(lam, T)):
            total[i] += a * c
    return not any(total)


def nullspace_certificates(n: int) -> list[RelationCertificate]:
    """A basis of the row relations of the n-th matrix, P(n) - D(n) vectors.

    Elimination runs on [M | I]; the identity block of every row that
    reduces to zero is an integer left-null vector. These are independent
    because the transform is invertible over Q.
    """
    M = build_matrix(n)
    nrows, ncols = M.shape
    rows = [list(r) + [int(i == k) for k in range(nrows)] for i, r in enumerate(M.entries)]
    rank = _bareiss(rows, ncols)
    certs = []
    for r in rows[rank:]:
        coeffs = {lam: a for lam, a in zip(M.row_index, r[ncols:]) if a}
        certs.append(make_certificate(n, coeffs))
    return certs


def in_span(target: dict[Partition, int], certs: Sequence[RelationCertificate]) -> bool:
    """Whether the coefficient vector `target` is a rational combination of `certs`."""
    if not certs:
        return not any(target.values())
    keys = sorted(set(target).union(*(c.as_dict() for c in certs)), key=lambda lam: lam.parts)
    base = [[c.as_dict().get(k, 0) for k in keys] for c in certs]
    extra = [target.get(k, 0) for k in keys]
    r0 = _bareiss([row[:] for row in base], len(keys))
    r1 = _bareiss([row[:] for row in base] + [extra], len(keys))
    return r0 == r1


