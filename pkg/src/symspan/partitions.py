"""Integer partitions and small number-theoretic helpers.

Partitions are the universal index type of the package: rows of the
coefficient matrix, coordinates of relation certificates and the arguments
of every bound are all partitions or sizes of partitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "enumerate_partitions",
    "iter_partitions",
    "count_partitions",
    "euler_phi",
    "d_statistic",
    "conjugate",
]


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive parts.

    Equality and hashing are by part list. ``Partition(())`` is the unique
    partition of 0.

    >>> Partition((3, 1)).n
    4
    """

    parts: tuple[int, ...]
    n: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Canonicalize an unordered collection of positive parts."""
        parts = [int(p) for p in parts]
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        return cls(tuple(sorted(parts, reverse=True)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def iter_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield part tuples of `n` in descending lexicographic order.

    Only parts ``<= largest`` are used when `largest` is given.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    # Explicit stack instead of recursion so n in the hundreds is fine.
    parts: list[int] = []
    stack = [(n, min(n, largest))]
    while stack:
        remaining, k = stack.pop()
        if k == 0:
            if parts:
                parts.pop()
            continue
        stack.append((remaining, k - 1))
        parts.append(k)
        rest = remaining - k
        if rest == 0:
            yield tuple(parts)
            parts.pop()
        else:
            stack.append((rest, min(rest, k)))
    return


def enumerate_partitions(n: int) -> list[Partition]:
    """Every partition of `n` once, ``(n)`` first and ``(1,...,1)`` last."""
    return [Partition(p) for p in iter_partitions(n)]


@lru_cache(maxsize=None)
def _partition_numbers(n: int) -> tuple[int, ...]:
    # Euler's pentagonal number recurrence.
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def count_partitions(n: int) -> int:
    """P(n), the number of partitions of `n`.

    >>> count_partitions(23)
    1255
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partition_numbers(n)[n]


def euler_phi(j: int) -> int:
    """Euler's totient by trial division."""
    if j < 1:
        raise ValueError("euler_phi is defined for j >= 1")
    result = j
    m = j
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def d_statistic(lam: Partition | Iterable[int]) -> int:
    """Sum of ``binom(part, 2)`` over the parts."""
    return sum(a * (a - 1) // 2 for a in lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    parts = tuple(lam)
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for a in parts if a > i) for i in range(parts[0])))
