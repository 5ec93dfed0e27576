"""
Normalized chain complexes, chain maps, mapping cones and homology.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

from apps.core.exceptions import NotAComplex, NotChainMap, PartcxError

from .complexes import SimplicialMap, SimplicialSet
from .smith import integer_rank_and_torsion, rational_rank

logger = logging.getLogger("partcx.homology")

INTEGERS = "z"
RATIONALS = "q"
RINGS = (INTEGERS, RATIONALS)


@dataclass(frozen=True)
class SparseMatrix:
    """Column-sparse integer matrix: ``columns[j]`` maps row index to entry."""

    nrows: int
    ncols: int
    columns: tuple[dict[int, int], ...]

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols, tuple({} for _ in range(ncols)))

    @classmethod
    def from_dense(cls, rows: list[list[int]]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        columns = tuple({i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols))
        return cls(nrows, ncols, columns)

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for j, column in enumerate(self.columns):
            for i, value in column.items():
                dense[i][j] = value
        return dense

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        columns = []
        for column in other.columns:
            result: dict[int, int] = {}
            for k, coefficient in column.items():
                for i, value in self.columns[k].items():
                    result[i] = result.get(i, 0) + coefficient * value
            columns.append({i: v for i, v in result.items() if v})
        return SparseMatrix(self.nrows, other.ncols, tuple(columns))

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, tuple({i: -v for i, v in c.items()} for c in self.columns))


@dataclass(frozen=True)
class ChainComplex:
    """
    ``ranks[n]`` is the basis size in degree n and ``boundaries[n]`` the map
    C_n -> C_(n-1). ``empty`` marks the augmented complex of the empty
    simplicial set.
    """

    ring: str
    ranks: Mapping[int, int]
    boundaries: Mapping[int, SparseMatrix] = field(default_factory=dict)
    reduced: bool = False
    empty: bool = False

    def __post_init__(self):
        if self.ring not in RINGS:
            raise PartcxError(f"Unknown ring {self.ring!r}", code="unknown_ring")

    @property
    def degrees(self) -> list[int]:
        return sorted(n for n, r in self.ranks.items() if r)

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def boundary(self, n: int) -> SparseMatrix:
        matrix = self.boundaries.get(n)
        if matrix is None:
            return SparseMatrix.zero(self.rank(n - 1), self.rank(n))
        return matrix

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * r for n, r in self.ranks.items())

    def validate(self) -> None:
        for n in self.degrees:
            if not (self.boundary(n) @ self.boundary(n + 1)).is_zero():
                raise NotAComplex(degree=n)

    def shift(self, k: int) -> "ChainComplex":
        """The k-fold suspension: degree n moves to n + k, differentials pick up (-1)^k."""
        sign = -1 if k % 2 else 1
        boundaries = {n + k: (-m if sign < 0 else m) for n, m in self.boundaries.items()}
        return ChainComplex(
            ring=self.ring,
            ranks={n + k: r for n, r in self.ranks.items()},
            boundaries=boundaries,
            reduced=self.reduced,
            empty=self.empty,
        )


@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    components: Mapping[int, SparseMatrix]

    def component(self, n: int) -> SparseMatrix:
        matrix = self.components.get(n)
        if matrix is None:
            return SparseMatrix.zero(self.target.rank(n), self.source.rank(n))
        return matrix

    def validate(self) -> None:
        for n in sorted(set(self.source.degrees) | set(self.target.degrees)):
            left = self.target.boundary(n) @ self.component(n)
            right = self.component(n - 1) @ self.source.boundary(n)
            if left.columns != right.columns:
                raise NotChainMap(degree=n)


def normalized_chain_complex(X: SimplicialSet, ring: str = INTEGERS, reduced: bool = False) -> ChainComplex:
    """
    Normalized chains of ``X``: basis the nondegenerate simplices,
    ∂σ = Σ (-1)^i d_iσ with degenerate faces sent to zero. With ``reduced``
    the complex is augmented to the ground ring in degree -1.
    """

    ranks = {d: X.count(d) for d in range(X.dimension + 1)}
    boundaries: dict[int, SparseMatrix] = {}
    for d in range(1, X.dimension + 1):
        columns = []
        for k in range(X.count(d)):
            column: dict[int, int] = {}
            for i, f in enumerate(X.faces[d][k]):
                if f.degenerate:
                    continue
                column[f.index] = column.get(f.index, 0) + (-1) ** i
            columns.append({r: v for r, v in column.items() if v})
        boundaries[d] = SparseMatrix(X.count(d - 1), X.count(d), tuple(columns))
    if reduced:
        ranks[-1] = 1
        boundaries[0] = SparseMatrix(1, X.count(0), tuple({0: 1} for _ in range(X.count(0))))
    return ChainComplex(ring=ring, ranks=ranks, boundaries=boundaries, reduced=reduced, empty=X.is_empty())


def chain_map(m: SimplicialMap, ring: str = INTEGERS, reduced: bool = False) -> ChainMap:
    """Chain map induced on normalized chains; degenerate images go to zero."""

    source = normalized_chain_complex(m.source, ring, reduced)
    target = normalized_chain_complex(m.target, ring, reduced)
    components: dict[int, SparseMatrix] = {}
    for d in range(m.source.dimension + 1):
        columns = []
        for k in range(m.source.count(d)):
            image = m.images[d][k]
            if image is None:
                raise NotChainMap("Simplicial map is undefined on a simplex.", dimension=d)
            columns.append({image.index: 1} if image.dim == d else {})
        components[d] = SparseMatrix(m.target.count(d), m.source.count(d), tuple(columns))
    if reduced:
        components[-1] = SparseMatrix(1, 1, ({0: 1},))
    return ChainMap(source=source, target=target, components=components)


@dataclass(frozen=True)
class DegreeHomology:
    degree: int
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def describe(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class HomologyResult:
    ring: str
    reduced: bool
    groups: tuple[DegreeHomology, ...]
    empty: bool = False

    def group(self, n: int) -> DegreeHomology:
        for g in self.groups:
            if g.degree == n:
                return g
        return DegreeHomology(n, 0)

    def betti(self, n: int) -> int:
        return self.group(n).betti

    def torsion(self, n: int) -> tuple[int, ...]:
        return self.group(n).torsion

    def nonzero(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return {g.degree: (g.betti, g.torsion) for g in self.groups if not g.is_zero()}

    def is_acyclic(self) -> bool:
        """Vanishing (reduced) homology in every degree; false for the empty complex."""
        return not self.empty and not self.nonzero()

    def matches(self, other: "HomologyResult") -> bool:
        return self.empty == other.empty and self.nonzero() == other.nonzero()

    def euler_characteristic(self) -> int:
        return sum((-1) ** g.degree * g.betti for g in self.groups)

    def describe(self) -> str:
        if self.empty:
            return "empty complex"
        tilde = "~" if self.reduced else ""
        nonzero = [g for g in self.groups if not g.is_zero()]
        if not nonzero:
            return "acyclic" if self.reduced else "0"
        return ", ".join(f"H{tilde}_{g.degree} = {g.describe()}" for g in nonzero)


def homology(C: ChainComplex) -> HomologyResult:
    """
    Betti numbers and torsion per degree.

    Over the integers ranks and invariant factors come from the Smith normal
    form of each boundary matrix; over the rationals only ranks are taken.
    """

    C.validate()
    if C.empty:
        return HomologyResult(ring=C.ring, reduced=C.reduced, groups=(), empty=True)
    degrees = C.degrees
    if not degrees:
        return HomologyResult(ring=C.ring, reduced=C.reduced, groups=())

    lo, hi = min(degrees), max(degrees)
    rank: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for n in range(lo, hi + 2):
        matrix = C.boundary(n)
        if matrix.is_zero():
            rank[n], torsion[n] = 0, ()
        elif C.ring == INTEGERS:
            rank[n], torsion[n] = integer_rank_and_torsion(matrix)
        else:
            rank[n], torsion[n] = rational_rank(matrix), ()

    groups = []
    for n in range(lo, hi + 1):
        betti = C.rank(n) - rank[n] - rank[n + 1]
        groups.append(DegreeHomology(n, betti, torsion[n + 1]))
    logger.debug("Computed homology", extra={"ring": C.ring, "degrees": [lo, hi]})
    return HomologyResult(ring=C.ring, reduced=C.reduced, groups=tuple(groups))


def simplicial_homology(X: SimplicialSet, ring: str = INTEGERS, reduced: bool = True) -> HomologyResult:
    return homology(normalized_chain_complex(X, ring, reduced))


def mapping_cone(f: ChainMap) -> ChainComplex:
    """
    Cone(f)_n = C_(n-1) ⊕ D_n with ∂(c, d) = (-∂c, f(c) + ∂d).

    The C-part of each basis comes first.
    """

    C, D = f.source, f.target
    degrees = {n + 1 for n in C.degrees} | set(D.degrees)
    if not degrees:
        return ChainComplex(ring=D.ring, ranks={}, reduced=D.reduced)
    ranks = {n: C.rank(n - 1) + D.rank(n) for n in range(min(degrees), max(degrees) + 1)}
    boundaries: dict[int, SparseMatrix] = {}
    for n in ranks:
        offset = C.rank(n - 2)
        columns = []
        dC = C.boundary(n - 1)
        fn = f.component(n - 1)
        for j in range(C.rank(n - 1)):
            column = {i: -v for i, v in dC.columns[j].items()} if j < dC.ncols else {}
            if j < fn.ncols:
                column.update({offset + i: v for i, v in fn.columns[j].items()})
            columns.append(column)
        dD = D.boundary(n)
        for j in range(D.rank(n)):
            columns.append({offset + i: v for i, v in dD.columns[j].items()} if j < dD.ncols else {})
        boundaries[n] = SparseMatrix(C.rank(n - 2) + D.rank(n - 1), ranks[n], tuple(columns))
    return ChainComplex(ring=D.ring, ranks=ranks, boundaries=boundaries, reduced=D.reduced)


def mapping_cone_homology(f: ChainMap) -> HomologyResult:
    f.validate()
    return homology(mapping_cone(f))

