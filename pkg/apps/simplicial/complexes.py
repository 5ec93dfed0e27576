"""
Finite simplicial sets stored by their nondegenerate simplices.

A simplicial set keeps, per dimension, an indexed tuple of opaque labels
and, for every simplex, its faces as :class:`Face` records. Degeneracies are
not stored: a degenerate face only remembers its nondegenerate core.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, NamedTuple, Sequence

from apps.core.exceptions import DanglingFace, IdentityViolation

logger = logging.getLogger("partcx.simplicial")


class Face(NamedTuple):
    """The i-th face of a simplex.

    ``index`` addresses dimension ``d - 1`` for a nondegenerate face; for a
    degenerate face it addresses the core simplex in dimension ``core_dim``.
    """

    index: int
    degenerate: bool = False
    core_dim: int | None = None


class Image(NamedTuple):
    """Image of a simplex under a simplicial map; ``dim`` below the source
    dimension marks a degeneracy of that lower simplex."""

    dim: int
    index: int


@dataclass(frozen=True)
class SimplicialSet:
    cells: tuple[tuple[Hashable, ...], ...]
    faces: tuple[tuple[tuple[Face, ...], ...], ...]
    _lookup: tuple[dict, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "_lookup",
            tuple({label: k for k, label in enumerate(dim_cells)} for dim_cells in self.cells),
        )

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    def is_empty(self) -> bool:
        return not self.cells

    def count(self, d: int) -> int:
        return len(self.cells[d]) if 0 <= d < len(self.cells) else 0

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(dim_cells) for dim_cells in self.cells)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector))

    def index(self, d: int, label: Hashable) -> int | None:
        if not 0 <= d < len(self.cells):
            return None
        return self._lookup[d].get(label)

    def label(self, d: int, k: int) -> Hashable:
        return self.cells[d][k]

    def face(self, d: int, k: int, i: int) -> Face:
        return self.faces[d][k][i]

    def simplices(self) -> Iterable[tuple[int, int]]:
        for d, dim_cells in enumerate(self.cells):
            for k in range(len(dim_cells)):
                yield d, k

    def labels(self) -> set[tuple[int, Hashable]]:
        return {(d, label) for d, dim_cells in enumerate(self.cells) for label in dim_cells}


def _normalize_face(raw: Any) -> Face:
    if isinstance(raw, Face):
        return raw
    if isinstance(raw, int):
        return Face(raw)
    return Face(*raw)


def build(
    cells: Sequence[Sequence[Hashable]],
    faces: Sequence[Sequence[Sequence[Any]]],
    validate: bool = True,
) -> SimplicialSet:
    """
    Assemble and validate a simplicial set.

    ``faces[d][k]`` lists the ``d + 1`` faces of the k-th d-simplex, each
    either a :class:`Face`, a bare index or an ``(index, degenerate,
    core_dim)`` tuple. Trailing empty dimensions are dropped.
    """

    cells = [tuple(dim_cells) for dim_cells in cells]
    while cells and not cells[-1]:
        cells.pop()
    normalized = []
    for d in range(len(cells)):
        dim_faces = faces[d] if d < len(faces) else ()
        normalized.append(tuple(tuple(_normalize_face(f) for f in simplex) for simplex in dim_faces))
    X = SimplicialSet(cells=tuple(cells), faces=tuple(normalized))
    if validate:
        _validate(X)
    return X


def _validate(X: SimplicialSet) -> None:
    for d, dim_cells in enumerate(X.cells):
        if len(X.faces[d]) != len(dim_cells):
            raise DanglingFace("Face data missing for some simplices.", dimension=d)
        for k, simplex_faces in enumerate(X.faces[d]):
            expected = d + 1 if d > 0 else 0
            if len(simplex_faces) != expected:
                raise DanglingFace(
                    "Wrong number of faces.", dimension=d, simplex=str(X.cells[d][k]),
                )
            for i, f in enumerate(simplex_faces):
                target = f.core_dim if f.degenerate else d - 1
                if target is None or not 0 <= target < d or not 0 <= f.index < X.count(target):
                    raise DanglingFace(
                        "Face index out of range.",
                        dimension=d, simplex=str(X.cells[d][k]), face=i,
                    )

    for d in range(2, len(X.cells)):
        for k in range(len(X.cells[d])):
            for j in range(d + 1):
                for i in range(j):
                    left = _face_of_face(X, d, k, j, i)
                    right = _face_of_face(X, d, k, i, j - 1)
                    if left is None or right is None:
                        continue
                    if left != right:
                        raise IdentityViolation(
                            "d_i d_j != d_(j-1) d_i",
                            dimension=d, simplex=str(X.cells[d][k]), i=i, j=j,
                        )


def _face_of_face(X: SimplicialSet, d: int, k: int, outer: int, inner: int) -> Face | None:
    """``d_inner d_outer`` of the simplex (d, k); ``None`` when degenerate data
    is involved and the composite cannot be resolved."""

    first = X.face(d, k, outer)
    if first.degenerate:
        return None
    second = X.face(d - 1, first.index, inner)
    if second.degenerate:
        return None
    return second


def from_simplices(
    simplices: Iterable[Sequence[Hashable]],
    vertex_key: Callable[[Hashable], Any] | None = None,
    close: bool = True,
) -> SimplicialSet:
    """
    Simplicial set of ordered simplices given as vertex tuples.

    The i-th face deletes the i-th vertex. With ``close`` the collection is
    completed under faces. Simplices are sorted per dimension by
    ``vertex_key`` (insertion order when omitted).
    """

    by_dim: dict[int, dict[tuple, None]] = {}
    pending = [tuple(s) for s in simplices if len(s)]
    for s in pending:
        by_dim.setdefault(len(s) - 1, {})[s] = None
    if close:
        for d in sorted(by_dim, reverse=True):
            if d == 0:
                continue
            lower = by_dim.setdefault(d - 1, {})
            for s in by_dim[d]:
                for i in range(len(s)):
                    lower.setdefault(s[:i] + s[i + 1:], None)

    top = max(by_dim, default=-1)
    cells = []
    for d in range(top + 1):
        dim_cells = list(by_dim.get(d, {}))
        if vertex_key is not None:
            dim_cells.sort(key=lambda s: tuple(vertex_key(v) for v in s))
        cells.append(tuple(dim_cells))

    lookup = [{s: k for k, s in enumerate(dim_cells)} for dim_cells in cells]
    faces = [tuple(() for _ in cells[0])] if cells else []
    for d in range(1, len(cells)):
        dim_faces = []
        for s in cells[d]:
            try:
                dim_faces.append(tuple(Face(lookup[d - 1][s[:i] + s[i + 1:]]) for i in range(d + 1)))
            except KeyError as exc:
                raise DanglingFace("Collection is not closed under faces.", simplex=str(s)) from exc
        faces.append(tuple(dim_faces))
    return SimplicialSet(cells=tuple(cells), faces=tuple(faces))


def empty() -> SimplicialSet:
    return SimplicialSet(cells=(), faces=())


def standard_simplex(n: int) -> SimplicialSet:
    """Δ[n] with vertices 0..n."""
    return from_simplices([tuple(range(n + 1))], vertex_key=int)


def simplex_boundary(n: int) -> SimplicialSet:
    """∂Δ[n]: every proper face of Δ[n]."""
    vertices = tuple(range(n + 1))
    return from_simplices(combinations(vertices, n), vertex_key=int)


def subcomplex(X: SimplicialSet, keep: Callable[[int, Hashable], bool]) -> SimplicialSet:
    """Simplices of ``X`` selected by ``keep``; the selection must be closed under faces."""

    cells = [[label for label in dim_cells if keep(d, label)] for d, dim_cells in enumerate(X.cells)]
    remap = [{} for _ in cells]
    for d, dim_cells in enumerate(X.cells):
        new_k = 0
        for k, label in enumerate(dim_cells):
            if keep(d, label):
                remap[d][k] = new_k
                new_k += 1
    faces = []
    for d, dim_cells in enumerate(X.cells):
        dim_faces = []
        for k in range(len(dim_cells)):
            if k not in remap[d]:
                continue
            simplex_faces = []
            for f in X.faces[d][k]:
                target = f.core_dim if f.degenerate else d - 1
                if f.index not in remap[target]:
                    raise DanglingFace("Selection is not closed under faces.", simplex=str(dim_cells[k]))
                simplex_faces.append(f._replace(index=remap[target][f.index]))
            dim_faces.append(tuple(simplex_faces))
        faces.append(dim_faces)
    return build(cells, faces, validate=False)


def cone(X: SimplicialSet) -> tuple[SimplicialSet, "SimplicialMap"]:
    """
    The join ``X ⋆ Δ[0]`` with the apex as last vertex, and the inclusion of ``X``.

    Labels are ``("base", σ)``, ``("cone", σ)`` and ``("apex",)``.
    """

    top = X.dimension + 1
    cells: list[list[Hashable]] = []
    faces: list[list[tuple[Face, ...]]] = []
    for n in range(top + 1):
        base = [("base", label) for label in X.cells[n]] if n <= X.dimension else []
        coned = [("cone", label) for label in X.cells[n - 1]] if n >= 1 else []
        apex = [("apex",)] if n == 0 else []
        cells.append(base + coned + apex)

    def base_index(d: int, k: int) -> int:
        return k

    def cone_index(d: int, k: int) -> int:
        # cone on the k-th (d-1)-simplex, sitting after the base d-simplices
        if d == 0:
            return X.count(0)
        return X.count(d) + k

    for n in range(top + 1):
        dim_faces: list[tuple[Face, ...]] = []
        for k in range(X.count(n)):
            dim_faces.append(tuple(Face(base_index(n - 1, f.index), f.degenerate, f.core_dim) for f in X.faces[n][k]))
        if n >= 1:
            m = n - 1
            for k in range(X.count(m)):
                if m == 0:
                    dim_faces.append((Face(cone_index(0, 0)), Face(base_index(0, k))))
                    continue
                simplex_faces = []
                for f in X.faces[m][k]:
                    if f.degenerate:
                        # the cone on a degenerate simplex is degenerate on the cone of its core
                        simplex_faces.append(Face(cone_index(f.core_dim + 1, f.index), True, f.core_dim + 1))
                    else:
                        simplex_faces.append(Face(cone_index(m, f.index)))
                simplex_faces.append(Face(base_index(m, k)))
                dim_faces.append(tuple(simplex_faces))
        if n == 0:
            dim_faces.append(())
        faces.append(dim_faces)

    C = build(cells, faces, validate=False)
    images = tuple(tuple(Image(d, k) for k in range(X.count(d))) for d in range(X.dimension + 1))
    return C, SimplicialMap(source=X, target=C, images=images)


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    images: tuple[tuple[Image | None, ...], ...]

    def image(self, d: int, k: int) -> Image | None:
        return self.images[d][k]

    def is_degenerate(self, d: int, k: int) -> bool:
        image = self.images[d][k]
        return image is not None and image.dim < d


def identity_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(
        source=X,
        target=X,
        images=tuple(tuple(Image(d, k) for k in range(X.count(d))) for d in range(X.dimension + 1)),
    )


@dataclass(frozen=True)
class IsoCheck:
    ok: bool
    counterexample: dict[str, Any] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_simplicial_iso(X: SimplicialSet, Y: SimplicialSet, m: SimplicialMap) -> IsoCheck:
    """
    Whether ``m`` is a dimensionwise bijection on nondegenerate simplices
    commuting with all faces. A failing check names one offending simplex.
    """

    if X.f_vector != Y.f_vector:
        return IsoCheck(False, {"reason": "f-vectors differ", "source": list(X.f_vector), "target": list(Y.f_vector)})

    for d in range(X.dimension + 1):
        seen: dict[int, int] = {}
        for k in range(X.count(d)):
            image = m.images[d][k] if d < len(m.images) and k < len(m.images[d]) else None
            if image is None:
                return IsoCheck(False, {"reason": "undefined image", "dimension": d, "simplex": str(X.label(d, k))})
            if image.dim != d:
                return IsoCheck(False, {"reason": "degenerate image", "dimension": d, "simplex": str(X.label(d, k))})
            if not 0 <= image.index < Y.count(d):
                return IsoCheck(False, {"reason": "undefined image", "dimension": d,
                                        "simplex": str(X.label(d, k)), "image": image.index})
            if image.index in seen:
                return IsoCheck(False, {
                    "reason": "not injective",
                    "dimension": d,
                    "simplex": str(X.label(d, k)),
                    "other": str(X.label(d, seen[image.index])),
                })
            seen[image.index] = k

    for d in range(1, X.dimension + 1):
        for k in range(X.count(d)):
            target_k = m.images[d][k].index
            for i in range(d + 1):
                source_face = X.face(d, k, i)
                target_face = Y.face(d, target_k, i)
                if source_face.degenerate or target_face.degenerate:
                    if source_face.degenerate != target_face.degenerate:
                        return IsoCheck(False, {"reason": "face degeneracy differs", "dimension": d,
                                                "simplex": str(X.label(d, k)), "face": i})
                    continue
                mapped = m.images[d - 1][source_face.index].index
                if mapped != target_face.index:
                    return IsoCheck(False, {
                        "reason": "face mismatch",
                        "dimension": d,
                        "simplex": str(X.label(d, k)),
                        "face": i,
                        "expected": str(Y.label(d - 1, target_face.index)),
                        "found": str(Y.label(d - 1, mapped)),
                    })
    return IsoCheck(True)
