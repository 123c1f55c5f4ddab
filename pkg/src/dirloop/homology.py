"""Homology of finitely presented cubical sets by exact elimination.

Chains are taken in the normalized sense: degenerate faces contribute
nothing to the boundary.  Coefficients live in the rationals or in a prime
field, selected by a :class:`FieldSpec`; all arithmetic is exact, there is
no floating point anywhere in the ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cubical import CubicalSet


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 for the rationals, else a prime."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``"q"`` for the rationals or ``"zp:<prime>"``."""
        t = text.strip().lower()
        if t == "q":
            return cls(0)
        if t.startswith("zp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls(p)
        raise ValueError(f"bad field spec {text!r}; expected 'q' or 'zp:<prime>'")

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"zp:{self.characteristic}"

    def from_int(self, n: int):
        return Fraction(n) if self.characteristic == 0 else n % self.characteristic

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, self.characteristic - 2, self.characteristic)

    def is_zero(self, a) -> bool:
        return a == 0 if self.characteristic == 0 else a % self.characteristic == 0


RATIONALS = FieldSpec(0)


def rank(matrix: list[list[int]], field: FieldSpec = RATIONALS) -> int:
    """Rank of an integer matrix over the given field, by row reduction."""
    rows = [[field.from_int(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        return 0
    r = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(r, len(rows)) if not field.is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        scale = field.inv(rows[r][c])
        rows[r] = [field.mul(scale, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


@dataclass(frozen=True)
class ChainComplex:
    """Ordered cube bases per dimension and integer boundary matrices.

    ``boundary[n]`` has one row per (n-1)-cube and one column per n-cube,
    in the order given by ``basis``.
    """

    basis: dict[int, list[str]]
    boundary: dict[int, list[list[int]]]

    def matrix(self, n: int) -> list[list[int]]:
        if n in self.boundary:
            return self.boundary[n]
        rows = len(self.basis.get(n - 1, []))
        return [[] for _ in range(rows)]


def chain_complex(K: CubicalSet) -> ChainComplex:
    """Normalized chain complex of ``K`` with integer coefficients.

    The boundary of an n-cube alternates over coordinate directions, taking
    the start face minus the end face; faces carrying a degeneracy word are
    dropped.  The squared boundary is checked to vanish before returning.
    """
    basis = {n: K.cubes_of_dim(n) for n in range(K.top_dim + 1)}
    index = {n: {c: i for i, c in enumerate(cs)} for n, cs in basis.items()}
    boundary: dict[int, list[list[int]]] = {}
    for n in range(1, K.top_dim + 1):
        rows = [[0] * len(basis[n]) for _ in basis[n - 1]]
        for col, c in enumerate(basis[n]):
            for i in range(1, n + 1):
                sign = -1 if i % 2 else 1
                for eps, s in ((0, sign), (1, -sign)):
                    ref = K.faces[(c, i, eps)]
                    if ref.is_degenerate:
                        continue
                    rows[index[n - 1][ref.base]][col] += s
        boundary[n] = rows
    for n in range(2, K.top_dim + 1):
        a, b = boundary[n - 1], boundary[n]
        for i in range(len(a)):
            for j in range(len(b[0]) if b else 0):
                acc = sum(a[i][k] * b[k][j] for k in range(len(b)))
                if acc != 0:
                    raise ValueError(f"boundary does not square to zero at dimension {n}")
    return ChainComplex(basis, boundary)


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of a graded vector space up to a truncation degree."""

    dims: dict[int, int]
    truncation: int

    def get(self, k: int) -> int:
        return self.dims.get(k, 0)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(k, d) for k, d in sorted(self.dims.items()) if d > 0]

    def reduced(self) -> "GradedDims":
        out = dict(self.dims)
        out[0] = max(out.get(0, 0) - 1, 0)
        return GradedDims(out, self.truncation)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.get(k) for k in range(self.truncation + 1))


def betti(K: CubicalSet, field: FieldSpec = RATIONALS, truncation: int | None = None) -> GradedDims:
    """Homology dimensions of ``K`` over ``field`` in degrees 0..truncation."""
    cc = chain_complex(K)
    top = K.top_dim
    if truncation is None:
        truncation = top
    ranks = {n: rank(cc.boundary[n], field) for n in range(1, top + 1)}
    dims = {}
    for k in range(truncation + 1):
        n_k = len(cc.basis.get(k, []))
        dims[k] = n_k - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return GradedDims(dims, truncation)
