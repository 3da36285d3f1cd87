"""Addition tables for finite distance magmas and monoids.

A structure on elements 0 = e0 < e1 < ... < en is stored as the full
(n+1) x (n+1) table of element indices: cell (i, j) holds the index of
ei (+) ej.  Identifying elements with their ranks makes table equality a
complete isomorphism invariant, so no separate isomorphism testing exists
anywhere in this package.

Axioms checked by `validate`:
  identity      cell (0, j) = j and (i, 0) = i
  symmetry      cell (i, j) = cell (j, i)
  positivity    cell (i, j) >= max(i, j)
  monotonicity  cell values nondecreasing along rows and columns
  associativity ((ei+ej)+ek) independent of bracketing -- this one
                separates magmas from monoids and is reported, not required.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import NotAssociativeError, TableFormatError

DEFAULT_VIOLATION_CAP = 32


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    is_magma: bool
    is_monoid: bool
    violations: tuple[Violation, ...]

    def to_json_dict(self) -> dict:
        return {
            "is_magma": self.is_magma,
            "is_monoid": self.is_monoid,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness)} for v in self.violations
            ],
        }


@dataclass(frozen=True)
class AdditionTable:
    """Immutable addition table over ranks 0..n; safe to share between workers."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def oplus(self, i: int, j: int) -> int:
        if not (0 <= i <= self.n and 0 <= j <= self.n):
            raise IndexError(f"element index out of range: ({i}, {j}) with n={self.n}")
        return self.entries[i][j]

    def multiple(self, i: int, m: int) -> int:
        """Index of the m-fold sum ei + ... + ei, m >= 1.

        Requires associativity (otherwise the fold depends on bracketing);
        stabilizes for m >= n.
        """
        if not self.is_monoid:
            raise NotAssociativeError("multiple() requires an associative table")
        if not 0 <= i <= self.n:
            raise IndexError(f"element index out of range: {i}")
        if m < 1:
            raise ValueError("m must be >= 1")
        x = i
        for _ in range(min(m, self.n + 1) - 1):
            nxt = self.entries[x][i]
            if nxt == x:
                break
            x = nxt
        return x

    @cached_property
    def _default_report(self) -> ValidationReport:
        return _validate(self, DEFAULT_VIOLATION_CAP)

    def validate(self, max_violations: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
        if max_violations == DEFAULT_VIOLATION_CAP:
            return self._default_report
        return _validate(self, max_violations)

    @property
    def is_magma(self) -> bool:
        return self._default_report.is_magma

    @property
    def is_monoid(self) -> bool:
        return self._default_report.is_monoid

    def upper_triangle(self) -> tuple[int, ...]:
        """Cells (1,1),(1,2),...,(1,n),(2,2),...,(n,n) in row-major order."""
        return tuple(
            self.entries[i][j]
            for i in range(1, self.n + 1)
            for j in range(i, self.n + 1)
        )

    def to_json_dict(self) -> dict:
        return {"n": self.n, "table": [list(row) for row in self.entries]}

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict())


def from_entries(n: int, entries: Sequence[Sequence[int]]) -> AdditionTable:
    """Build a table verbatim, checking only shape and cell range.

    Axiom violations are not rejected here; use validate() for that.
    """
    if n < 0:
        raise TableFormatError(f"n must be nonnegative, got {n}")
    if len(entries) != n + 1:
        raise TableFormatError(f"expected {n + 1} rows, got {len(entries)}")
    rows = []
    for i, row in enumerate(entries):
        if len(row) != n + 1:
            raise TableFormatError(f"row {i} has {len(row)} cells, expected {n + 1}")
        for j, cell in enumerate(row):
            if isinstance(cell, bool) or not isinstance(cell, int):
                raise TableFormatError(f"cell ({i},{j}) is not an integer: {cell!r}")
            if not 0 <= cell <= n:
                raise TableFormatError(f"cell ({i},{j}) out of range: {cell}")
        rows.append(tuple(row))
    return AdditionTable(n, tuple(rows))


def from_upper_triangle(n: int, cells: Sequence[int]) -> AdditionTable:
    """Inverse of AdditionTable.upper_triangle(); identity row/column implied."""
    expected = n * (n + 1) // 2
    if len(cells) != expected:
        raise TableFormatError(f"expected {expected} triangle cells, got {len(cells)}")
    square = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        square[0][j] = j
        square[j][0] = j
    it = iter(cells)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            v = next(it)
            square[i][j] = v
            square[j][i] = v
    return from_entries(n, square)


def _validate(t: AdditionTable, cap: int) -> ValidationReport:
    if cap < 1:
        raise ValueError("max_violations must be >= 1")
    n = t.n
    e = t.entries
    violations: list[Violation] = []

    def add(axiom: str, witness: tuple[int, ...]) -> bool:
        """Record a violation; return False once the cap is reached."""
        if len(violations) < cap:
            violations.append(Violation(axiom, witness))
        return len(violations) < cap

    scanning = True
    for j in range(n + 1):
        if e[0][j] != j and not add("identity", (0, j)):
            scanning = False
            break
        if e[j][0] != j and not add("identity", (j, 0)):
            scanning = False
            break
    symmetric = True
    if scanning:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if e[i][j] != e[j][i]:
                    symmetric = False
                    if not add("symmetry", (i, j)):
                        scanning = False
                        break
            if not scanning:
                break
    if scanning:
        for i in range(1, n + 1):
            for j in range(i, n + 1) if symmetric else range(1, n + 1):
                if e[i][j] < max(i, j) and not add("positivity", (i, j)):
                    scanning = False
                    break
            if not scanning:
                break
    if scanning:
        # adjacent comparisons suffice; witness = the cell that dropped
        for i in range(n + 1):
            for j in range(n + 1):
                if j + 1 <= n and e[i][j + 1] < e[i][j]:
                    if not add("monotonicity", (i, j + 1)):
                        scanning = False
                        break
                if i + 1 <= n and e[i + 1][j] < e[i][j]:
                    if not add("monotonicity", (i + 1, j)):
                        scanning = False
                        break
            if not scanning:
                break

    is_magma = not violations
    associative = is_magma
    if is_magma:
        # symmetry holds, so the three bracketings of {i,j,k} cover all
        # ordered instances; i <= j <= k shrinks the triple space 6-fold
        for i in range(1, n + 1):
            row_i = e[i]
            for j in range(i, n + 1):
                ij = row_i[j]
                row_j = e[j]
                for k in range(j, n + 1):
                    p1 = e[ij][k]
                    p2 = e[row_i[k]][j]
                    if p1 != p2 or p1 != e[row_j[k]][i]:
                        associative = False
                        if not add("associativity", (i, j, k)):
                            scanning = False
                            break
                if not scanning:
                    break
            if not scanning:
                break

    return ValidationReport(
        is_magma=is_magma,
        is_monoid=is_magma and associative,
        violations=tuple(violations),
    )


def validate(t: AdditionTable, max_violations: int = DEFAULT_VIOLATION_CAP) -> ValidationReport:
    return t.validate(max_violations)


def fold_oplus(t: AdditionTable, indices: Iterable[int]) -> int:
    """Left fold of (+) over element indices; empty fold is 0 (the identity)."""
    return reduce(lambda a, b: t.entries[a][b], indices, 0)


def max_monoid(n: int) -> AdditionTable:
    """ei + ej = max(ei, ej); the unique monoid of Archimedean complexity 1."""
    return from_entries(
        n, [[max(i, j) for j in range(n + 1)] for i in range(n + 1)]
    )


def capped_naturals(n: int) -> AdditionTable:
    """{0..n} with i + j capped at n; the unique monoid of complexity n."""
    return from_entries(
        n, [[min(i + j, n) for j in range(n + 1)] for i in range(n + 1)]
    )


# --- monoid file format ----------------------------------------------------
# A single JSON object {"n": <int>, "table": [[...], ...]} holding the full
# (n+1) x (n+1) integer table, row-major.  Shared by every part of the tool.


def from_json_dict(obj: object) -> AdditionTable:
    if not isinstance(obj, dict):
        raise TableFormatError("expected a JSON object with keys 'n' and 'table'")
    if "n" not in obj or "table" not in obj:
        raise TableFormatError("missing required key 'n' or 'table'")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise TableFormatError(f"'n' must be an integer, got {n!r}")
    table = obj["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise TableFormatError("'table' must be a list of rows")
    return from_entries(n, table)


def loads(text: str) -> AdditionTable:
    return from_json_dict(json.loads(text))


def load(path) -> AdditionTable:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))


def dump(t: AdditionTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(t.to_json_dict(), fh)
        fh.write("\n")
