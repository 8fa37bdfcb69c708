"""Small dense linear algebra over exact rationals (Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rank(rows: Matrix) -> int:
    m = [row[:] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(a: Matrix, b: list[Fraction]) -> list[Fraction]:
    """Solve the square system a x = b; raises ValueError if singular."""
    n = len(a)
    m = [row[:] + [bv] for row, bv in zip(a, b)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            raise ValueError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        inv = Fraction(1) / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def determinant(a: Matrix) -> Fraction:
    n = len(a)
    m = [row[:] for row in a]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


class RowBasis:
    """Incrementally maintained row space; used for rank-greedy selections."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []  # reduced, each with a pivot column
        self.pivots: list[int] = []

    def _reduce(self, row: list[Fraction]) -> list[Fraction]:
        row = row[:]
        for piv, basis in zip(self.pivots, self.rows):
            if row[piv]:
                f = row[piv]
                row = [a - f * b for a, b in zip(row, basis)]
        return row

    def try_add(self, row: list[Fraction]) -> bool:
        """Add row if it enlarges the span; returns True when added."""
        red = self._reduce(row)
        piv = next((c for c in range(self.width) if red[c]), None)
        if piv is None:
            return False
        inv = Fraction(1) / red[piv]
        self.rows.append([x * inv for x in red])
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)
