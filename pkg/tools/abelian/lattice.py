"""
Integer lattices in echelon form.

Rows are kept sorted by pivot column with positive pivots, so reducing a vector
against the basis yields a canonical representative of its coset.
"""

from typing import Dict, List, Sequence, Tuple


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntegerLattice:
    """A subgroup of Z^N stored as an echelon basis."""

    __slots__ = ("dimension", "basis", "pivots", "_row_of_pivot")

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.basis: List[List[int]] = []
        self.pivots: List[int] = []
        self._row_of_pivot: Dict[int, int] = {}

    @classmethod
    def spanned_by(cls, dimension: int, vectors: Sequence[Sequence[int]]) -> "IntegerLattice":
        lattice = cls(dimension)
        for vec in vectors:
            lattice.add_vector(vec)
        return lattice

    def add_vector(self, vec0: Sequence[int]) -> None:
        if len(vec0) != self.dimension:
            raise ValueError(f"expected a vector of length {self.dimension}, got {len(vec0)}")
        vec = list(vec0)
        for j in range(self.dimension):
            b = vec[j]
            if b == 0:
                continue
            p = self._row_of_pivot.get(j)
            if p is None:
                if b < 0:
                    vec = [-v for v in vec]
                self._insert_row(j, vec)
                return
            row = self.basis[p]
            a = row[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
                continue
            x, y, g = xgcd(a, b)
            ag, mbg = a // g, -b // g
            new_row = [x * r + y * v for r, v in zip(row, vec)]
            vec = [mbg * r + ag * v for r, v in zip(row, vec)]
            self.basis[p] = new_row

    def _insert_row(self, pivot: int, row: List[int]) -> None:
        where = 0
        while where < len(self.pivots) and self.pivots[where] < pivot:
            where += 1
        self.basis.insert(where, row)
        self.pivots.insert(where, pivot)
        self._row_of_pivot = {piv: i for i, piv in enumerate(self.pivots)}

    def reduce(self, vec0: Sequence[int]) -> Tuple[int, ...]:
        """Canonical representative of ``vec0 + L``: every pivot entry lands in [0, pivot)."""
        vec = list(vec0)
        for row, j in zip(self.basis, self.pivots):
            d = row[j]
            q = vec[j] // d
            if q:
                vec = [v - q * r for v, r in zip(vec, row)]
        return tuple(vec)

    def __contains__(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        """True iff the lattice is all of Z^N."""
        if self.rank != self.dimension:
            return False
        return all(row[j] == 1 for row, j in zip(self.basis, self.pivots))
