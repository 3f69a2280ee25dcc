"""Recompute both published tables and diff them against the golden copy."""

from __future__ import annotations

from typing import Callable

from .bounds import compute_E, compute_G, compute_H, compute_U
from .golden import GoldenTables
from .partitions import count_partitions
from .rank import build_matrix, rank_exact, rank_modular


def exact_D(n: int) -> int:
    return rank_exact(build_matrix(n))


def modular_D(n: int) -> int:
    return rank_modular(n).rank


def compute_tables(n_max: int = 23, D: Callable[[int], int] = exact_D) -> GoldenTables:
    """Both tables for n = 1..n_max, in the golden layout."""
    U = compute_U(n_max)
    t1, t2 = {}, {}
    for n in range(1, n_max + 1):
        d = D(n)
        t1[n] = {"D": d, "U": U[n], "eq2": n * (n - 1) // 2 + 1, "P": count_partitions(n)}
        t2[n] = {"D": d, "E": compute_E(n), "G": compute_G(n), "H": compute_H(n)}
    return GoldenTables(t1, t2)


def diff_tables(computed: GoldenTables, golden: GoldenTables) -> list[str]:
    """Located mismatches over the n range of `computed`, table 1 first."""
    out = []
    for table in (1, 2):
        got = computed.table1 if table == 1 else computed.table2
        want = golden.table1 if table == 1 else golden.table2
        for n in sorted(got):
            for col, value in got[n].items():
                expected = want.get(n, {}).get(col)
                if expected != value:
                    out.append(f"table {table} {col}({n}): published {expected}, computed {value}")
    return out


def u_minus_d(computed: GoldenTables) -> dict[int, int]:
    """Nonzero U(n) - D(n)."""
    return {
        n: row["U"] - row["D"] for n, row in sorted(computed.table1.items()) if row["U"] != row["D"]
    }
