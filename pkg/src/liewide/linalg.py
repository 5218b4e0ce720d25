"""Exact linear algebra over the rationals.

Matrices are lists of rows, entries are :class:`fractions.Fraction` (ints are
accepted on input).  Echelon forms use the leftmost pivot in each row and
normalise the pivot to 1, so reduced bases are canonical and reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list  # list[list[Fraction]]


def to_fraction_matrix(rows: Iterable[Iterable]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> list[list[Fraction]]:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * ncols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(ncols):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def transpose(a: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    n = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            inv = 1 / p
            m[r] = [x * inv for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [x - f * y if y else x for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``, returned in reduced echelon form."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return rref(basis, ncols)[0] if basis else []


def row_space(rows: Iterable[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    return rref(rows, ncols)[0]


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


class EchelonBasis:
    """Incrementally built basis that can express vectors in its own terms.

    Each accepted vector is stored together with a reduced copy; ``coords``
    returns the coefficients of a vector over the accepted vectors, or
    ``None`` if the vector is not in their span.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.vectors: list[list[Fraction]] = []
        self._rows: list[tuple[int, list[Fraction], list[Fraction]]] = []

    def __len__(self) -> int:
        return len(self.vectors)

    def _reduce(self, v):
        v = [Fraction(x) for x in v]
        combo = [Fraction(0)] * len(self.vectors)
        for pivot, row, rcombo in self._rows:
            f = v[pivot]
            if f:
                for j, y in enumerate(row):
                    if y:
                        v[j] -= f * y
                for j, y in enumerate(rcombo):
                    if y:
                        combo[j] -= f * y
        return v, combo

    def add(self, v) -> bool:
        """Add ``v`` if independent; returns whether it was added."""
        red, combo = self._reduce(v)
        pivot = next((j for j, x in enumerate(red) if x), None)
        if pivot is None:
            return False
        inv = 1 / red[pivot]
        red = [x * inv for x in red]
        combo = [x * inv for x in combo] + [inv]
        for k, (p, row, rc) in enumerate(self._rows):
            self._rows[k] = (p, row, rc + [Fraction(0)])
        self._rows.append((pivot, red, combo))
        self.vectors.append([Fraction(x) for x in v])
        return True

    def coords(self, v):
        red, combo = self._reduce(v)
        if any(red):
            return None
        return [-x for x in combo]

    def contains(self, v) -> bool:
        return not any(self._reduce(v)[0])


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class SparseEchelon:
    """Reduced row echelon form over sparse rows (dicts column -> value).

    Rows are kept fully reduced, so a new row is reduced in one pass over its
    pivot columns.  Suited to large, very sparse homogeneous systems.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        row = {c: Fraction(x) for c, x in row.items() if x}
        for p in [c for c in row if c in self.rows]:
            f = row.get(p)
            if not f:
                continue
            for c, y in self.rows[p].items():
                v = row.get(c, 0) - f * y
                if v:
                    row[c] = v
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {c: x * inv for c, x in row.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for c, y in row.items():
                    v = other.get(c, 0) - f * y
                    if v:
                        other[c] = v
                    else:
                        other.pop(c, None)
        self.rows[p] = row
        return True

    def nullspace(self) -> list[dict]:
        """Sparse basis of the solutions, one vector per free column."""
        free = [c for c in range(self.ncols) if c not in self.rows]
        where: dict = {}
        for p, row in self.rows.items():
            for c, x in row.items():
                if c != p:
                    where.setdefault(c, []).append((p, x))
        out = []
        for f in free:
            v = {f: Fraction(1)}
            for p, x in where.get(f, []):
                v[p] = -x
            out.append(v)
        return out
