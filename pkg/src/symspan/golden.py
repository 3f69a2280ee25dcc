"""Published values of D, U, n(n-1)/2+1, P and D, E, G, H for n = 1..23.

Stored twice in different layouts, typed in separately: once as the printed
rows, once keyed by n. :func:`cross_check` compares the two and the test
suite runs it.
"""

from __future__ import annotations

from dataclasses import dataclass

N_MAX = 23

# Layout A: rows exactly as printed, n = 1..23 left to right.
_TABLE1_ROWS = {
    "D": "1 2 3 5 7 11 13 19 23 29 35 45 51 62 69 79 90 106 118 134 146 161 176",
    "U": "1 2 3 5 7 11 13 19 23 29 35 45 51 62 69 79 90 106 119 135 146 161 176",
    "eq2": "1 2 4 7 11 16 22 29 37 46 56 67 79 92 106 121 137 154 172 191 211 232 254",
    "P": "1 2 3 5 7 11 15 22 30 42 56 77 101 135 176 231 297 385 490 627 792 1002 1255",
}
_TABLE2_ROWS = {
    "D": "1 2 3 5 7 11 13 19 23 29 35 45 51 62 69 79 90 106 118 134 146 161 176",
    "E": "1 2 3 5 7 9 13 18 21 27 34 39 46 54 61 72 83 92 106 118 130 145 162",
    "G": "0 1 1 3 4 4 7 13 13 18 25 32 32 32 40 49 52 62 73 85 102 112 127",
    "H": "0 1 1 3 4 4 7 11 13 18 19 19 25 32 40 43 52 62 73 85 89 102 116",
}

# Layout B: n -> (D, U, eq2, P) and n -> (D, E, G, H).
_TABLE1_BY_N = {
    1: (1, 1, 1, 1), 2: (2, 2, 2, 2), 3: (3, 3, 4, 3), 4: (5, 5, 7, 5),
    5: (7, 7, 11, 7), 6: (11, 11, 16, 11), 7: (13, 13, 22, 15),
    8: (19, 19, 29, 22), 9: (23, 23, 37, 30), 10: (29, 29, 46, 42),
    11: (35, 35, 56, 56), 12: (45, 45, 67, 77), 13: (51, 51, 79, 101),
    14: (62, 62, 92, 135), 15: (69, 69, 106, 176), 16: (79, 79, 121, 231),
    17: (90, 90, 137, 297), 18: (106, 106, 154, 385), 19: (118, 119, 172, 490),
    20: (134, 135, 191, 627), 21: (146, 146, 211, 792), 22: (161, 161, 232, 1002),
    23: (176, 176, 254, 1255),
}
_TABLE2_BY_N = {
    1: (1, 1, 0, 0), 2: (2, 2, 1, 1), 3: (3, 3, 1, 1), 4: (5, 5, 3, 3),
    5: (7, 7, 4, 4), 6: (11, 9, 4, 4), 7: (13, 13, 7, 7), 8: (19, 18, 13, 11),
    9: (23, 21, 13, 13), 10: (29, 27, 18, 18), 11: (35, 34, 25, 19),
    12: (45, 39, 32, 19), 13: (51, 46, 32, 25), 14: (62, 54, 32, 32),
    15: (69, 61, 40, 40), 16: (79, 72, 49, 43), 17: (90, 83, 52, 52),
    18: (106, 92, 62, 62), 19: (118, 106, 73, 73), 20: (134, 118, 85, 85),
    21: (146, 130, 102, 89), 22: (161, 145, 112, 102), 23: (176, 162, 127, 116),
}


@dataclass(frozen=True)
class GoldenTables:
    table1: dict[int, dict[str, int]]
    table2: dict[int, dict[str, int]]

    def value(self, table: int, column: str, n: int) -> int:
        return (self.table1 if table == 1 else self.table2)[n][column]

    def to_json_obj(self) -> dict:
        return {
            "table1": {str(n): row for n, row in self.table1.items()},
            "table2": {str(n): row for n, row in self.table2.items()},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GoldenTables":
        return cls(
            {int(n): dict(row) for n, row in obj["table1"].items()},
            {int(n): dict(row) for n, row in obj["table2"].items()},
        )


def _from_rows(rows: dict[str, str]) -> dict[int, dict[str, int]]:
    cols = {name: [int(x) for x in line.split()] for name, line in rows.items()}
    return {n: {name: vals[n - 1] for name, vals in cols.items()} for n in range(1, N_MAX + 1)}


def _from_by_n(by_n: dict[int, tuple[int, ...]], names: tuple[str, ...]) -> dict[int, dict[str, int]]:
    return {n: dict(zip(names, vals)) for n, vals in by_n.items()}


def cross_check() -> list[str]:
    """Disagreements between the two transcriptions (empty when consistent)."""
    problems = []
    pairs = [
        (1, _from_rows(_TABLE1_ROWS), _from_by_n(_TABLE1_BY_N, ("D", "U", "eq2", "P"))),
        (2, _from_rows(_TABLE2_ROWS), _from_by_n(_TABLE2_BY_N, ("D", "E", "G", "H"))),
    ]
    for table, a, b in pairs:
        if set(a) != set(b):
            problems.append(f"table {table}: n ranges differ")
            continue
        for n in a:
            if a[n] != b[n]:
                problems.append(f"table {table}, n={n}: {a[n]} != {b[n]}")
    t1, t2 = _from_rows(_TABLE1_ROWS), _from_rows(_TABLE2_ROWS)
    for n in t1:
        if t1[n]["D"] != t2[n]["D"]:
            problems.append(f"D({n}) differs between tables")
    return problems


def golden_tables() -> GoldenTables:
    return GoldenTables(_from_rows(_TABLE1_ROWS), _from_rows(_TABLE2_ROWS))
