"""Root systems in fundamental-weight coordinates.

A weight is a tuple of integers ``(c_1, ..., c_r)`` with ``c_i = <lambda, alpha_i^vee>``.
Simple root ``alpha_j`` is column ``j`` of the Cartan matrix, so pairing a weight
against a simple coroot is a coordinate read and a simple reflection is a
one-line update.  Simple-root indices are 0-based throughout the library; the
1-based ``s1 s2 ...`` notation only appears when rendering words.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Weight = tuple  # tuple[int, ...]

BUILTIN_LABELS = ("A1", "A2", "A3", "B2", "C2", "G2")

_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    # alpha_1 long, alpha_2 short
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    # alpha_1 short, alpha_2 long
    "G2": ((2, -3), (-1, 2)),
}

MAX_POSITIVE_ROOTS = 200


class InvalidCartan(ValueError):
    pass


class NotFiniteType(ValueError):
    pass


@dataclass(frozen=True)
class CartanDatum:
    label: str
    cartan: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.cartan)
        object.__setattr__(self, "cartan", rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidCartan(f"Cartan matrix must be square and nonempty, got {rows!r}")
        for i in range(n):
            if rows[i][i] != 2:
                raise InvalidCartan(f"diagonal entry C[{i}][{i}] = {rows[i][i]} != 2")
            for j in range(n):
                if i != j and rows[i][j] > 0:
                    raise InvalidCartan(f"off-diagonal entry C[{i}][{j}] = {rows[i][j]} > 0")
                if i != j and (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise InvalidCartan(f"C[{i}][{j}] and C[{j}][{i}] must vanish together")
        if self.label in _CARTAN and rows != _CARTAN[self.label]:
            raise InvalidCartan(f"matrix does not match the standard {self.label} Cartan matrix")

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @classmethod
    def from_label(cls, label: str) -> "CartanDatum":
        if label not in _CARTAN:
            raise InvalidCartan(f"unknown label {label!r}; expected one of {BUILTIN_LABELS}")
        return cls(label, _CARTAN[label])

    @classmethod
    def custom(cls, matrix: Sequence[Sequence[int]]) -> "CartanDatum":
        return cls("Custom", tuple(tuple(row) for row in matrix))


@dataclass(frozen=True)
class RootSystem:
    datum: CartanDatum
    simple_roots: tuple
    positive_roots: tuple
    rho: Weight
    _simple_coords: dict = field(repr=False, compare=False, hash=False, default=None)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def label(self) -> str:
        return self.datum.label

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def simple_coords(self, lam: Weight) -> tuple:
        """Coordinates of ``lam`` in the simple-root basis (exact rationals)."""
        return _solve_rational(self.datum.cartan, lam)

    def is_positive_root(self, lam: Weight) -> bool:
        return tuple(lam) in self._simple_coords

    def is_root(self, lam: Weight) -> bool:
        lam = tuple(lam)
        return lam in self._simple_coords or tuple(-x for x in lam) in self._simple_coords

    def __reduce__(self):
        return (build_root_system, (self.datum,))


def _solve_rational(cartan, lam) -> tuple:
    # Solve C x = lam by Gauss-Jordan over Q; C is tiny.
    n = len(cartan)
    rows = [[Fraction(cartan[i][j]) for j in range(n)] + [Fraction(lam[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise NotFiniteType("singular Cartan matrix is not of finite type")
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(rows[i][n] for i in range(n))


def reflect(rs: RootSystem, j: int, lam: Weight) -> Weight:
    """``s_j(lam) = lam - <lam, alpha_j^vee> alpha_j``."""
    c = lam[j]
    if c == 0:
        return tuple(lam)
    alpha = rs.simple_roots[j]
    return tuple(x - c * a for x, a in zip(lam, alpha))


def pairing(rs: RootSystem, lam: Weight, j: int) -> int:
    if not 0 <= j < rs.rank:
        raise IndexError(f"simple root index {j} out of range for rank {rs.rank}")
    return lam[j]


def build_root_system(datum: CartanDatum) -> RootSystem:
    n = datum.rank
    _solve_rational(datum.cartan, (0,) * n)
    simple = tuple(tuple(datum.cartan[i][j] for i in range(n)) for j in range(n))
    roots = set(simple) | {tuple(-x for x in a) for a in simple}
    frontier = list(roots)
    stub = RootSystem(datum, simple, (), (1,) * n)
    while frontier:
        nxt = []
        for lam in frontier:
            for j in range(n):
                mu = reflect(stub, j, lam)
                if mu not in roots:
                    roots.add(mu)
                    nxt.append(mu)
        if len(roots) > 2 * MAX_POSITIVE_ROOTS:
            raise NotFiniteType(f"reflection closure exceeded {MAX_POSITIVE_ROOTS} positive roots")
        frontier = nxt

    coords = {}
    for lam in roots:
        x = _solve_rational(datum.cartan, lam)
        if any(c.denominator != 1 for c in x):
            raise InvalidCartan(f"root {lam} is not an integral combination of simple roots")
        if all(c >= 0 for c in x):
            coords[lam] = tuple(int(c) for c in x)
        elif not all(c <= 0 for c in x):
            raise InvalidCartan(f"root {lam} has mixed-sign simple-root coordinates")
    positive = tuple(sorted(coords, key=lambda lam: (sum(coords[lam]), coords[lam])))
    return RootSystem(datum, simple, positive, (1,) * n, coords)


_CACHE: dict = {}


def root_system(group) -> RootSystem:
    """Root system for a label such as ``"A2"``, a Cartan matrix, or a datum."""
    if isinstance(group, RootSystem):
        return group
    if isinstance(group, str):
        datum = CartanDatum.from_label(group)
    elif isinstance(group, CartanDatum):
        datum = group
    else:
        datum = CartanDatum.custom(group)
    if datum not in _CACHE:
        _CACHE[datum] = build_root_system(datum)
    return _CACHE[datum]
