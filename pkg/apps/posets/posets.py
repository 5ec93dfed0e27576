"""
Finite posets, monotone maps, order complexes and categories of elements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from apps.core.exceptions import ElementNotFound, InvalidPoset, InvalidPresheaf, NotMonotone
from apps.simplicial.complexes import Image, SimplicialMap, SimplicialSet, from_simplices

logger = logging.getLogger("partcx.posets")


@dataclass(frozen=True)
class Poset:
    """
    ``up[i]`` is the set of indices ``j`` with ``elements[i] <= elements[j]``
    (reflexive and transitively closed).
    """

    elements: tuple[Hashable, ...]
    up: tuple[frozenset[int], ...]
    down: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        down: list[set[int]] = [set() for _ in self.elements]
        for i, ups in enumerate(self.up):
            for j in ups:
                down[j].add(i)
        object.__setattr__(self, "down", tuple(frozenset(d) for d in down))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: Hashable) -> bool:
        return element in self._index

    def index(self, element: Hashable) -> int:
        try:
            return self._index[element]
        except KeyError as exc:
            raise ElementNotFound(element=str(element)) from exc

    def leq(self, x: Hashable, y: Hashable) -> bool:
        return self.index(y) in self.up[self.index(x)]

    def leq_index(self, i: int, j: int) -> bool:
        return j in self.up[i]

    def strict_up(self, i: int) -> frozenset[int]:
        return self.up[i] - {i}

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if self.down[i] == {i}]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if self.up[i] == {i}]

    def minimum(self) -> int | None:
        mins = self.minimal()
        return mins[0] if len(mins) == 1 and len(self.up[mins[0]]) == len(self) else None

    def maximum(self) -> int | None:
        maxs = self.maximal()
        return maxs[0] if len(maxs) == 1 and len(self.down[maxs[0]]) == len(self) else None

    def subposet(self, indices: Iterable[int]) -> "Poset":
        """Induced subposet on ``indices`` (kept in ascending index order)."""
        keep = sorted(set(indices))
        position = {i: k for k, i in enumerate(keep)}
        return Poset(
            elements=tuple(self.elements[i] for i in keep),
            up=tuple(frozenset(position[j] for j in self.up[i] if j in position) for i in keep),
        )

    def validate(self) -> None:
        for i, ups in enumerate(self.up):
            if i not in ups:
                raise InvalidPoset("Relation is not reflexive.", element=str(self.elements[i]))
            for j in ups:
                if j != i and i in self.up[j]:
                    raise InvalidPoset(
                        "Relation is not antisymmetric.",
                        left=str(self.elements[i]), right=str(self.elements[j]),
                    )
                if not self.up[j] <= ups:
                    raise InvalidPoset("Relation is not transitive.", element=str(self.elements[i]))

    def cover_relations(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``i < j`` and nothing strictly between."""
        covers = []
        for i in range(len(self)):
            above = self.strict_up(i)
            for j in sorted(above):
                if not any(j in self.up[k] for k in above if k != j):
                    covers.append((i, j))
        return covers


def from_relation(
    elements: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    validate: bool = True,
) -> Poset:
    """Poset from an order predicate evaluated on every pair."""
    elements = tuple(elements)
    up = tuple(frozenset(j for j, y in enumerate(elements) if leq(x, y)) for x in elements)
    P = Poset(elements=elements, up=up)
    if validate:
        P.validate()
    return P


def from_covers(elements: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]) -> Poset:
    """Poset generated by the relations ``x <= y`` in ``pairs`` (transitive closure)."""
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    succ: list[set[int]] = [set() for _ in elements]
    for x, y in pairs:
        succ[index[x]].add(index[y])
    up: list[frozenset[int]] = []
    for i in range(len(elements)):
        seen = {i}
        stack = [i]
        while stack:
            for j in succ[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        up.append(frozenset(seen))
    P = Poset(elements=elements, up=tuple(up))
    P.validate()
    return P


def chain(n: int) -> Poset:
    """The chain 0 < 1 < ... < n - 1."""
    return from_relation(range(n), lambda x, y: x <= y)


def antichain(n: int) -> Poset:
    return from_relation(range(n), lambda x, y: x == y)


@dataclass(frozen=True)
class MonotoneMap:
    source: Poset
    target: Poset
    assignment: tuple[int, ...]

    def __call__(self, element: Hashable) -> Hashable:
        return self.target.elements[self.assignment[self.source.index(element)]]

    def validate(self) -> None:
        for i, ups in enumerate(self.source.up):
            fi = self.assignment[i]
            for j in ups:
                if not self.target.leq_index(fi, self.assignment[j]):
                    raise NotMonotone(
                        source=str(self.source.elements[i]), target=str(self.source.elements[j]),
                    )


def monotone_map(source: Poset, target: Poset, func: Callable[[Hashable], Hashable], validate: bool = True) -> MonotoneMap:
    f = MonotoneMap(source, target, tuple(target.index(func(x)) for x in source.elements))
    if validate:
        f.validate()
    return f


def identity(P: Poset) -> MonotoneMap:
    return MonotoneMap(P, P, tuple(range(len(P))))


def strict_chains(P: Poset) -> Iterator[tuple[int, ...]]:
    """Every strictly increasing chain of ``P`` as an index tuple, in lexicographic order."""

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield prefix
        for j in sorted(P.strict_up(prefix[-1])):
            yield from extend(prefix + (j,))

    for i in range(len(P)):
        yield from extend((i,))


def order_complex(P: Poset) -> SimplicialSet:
    """
    The nerve of ``P`` by its nondegenerate part: n-simplices are chains
    p_0 < ... < p_n (labels are element tuples), d_i deletes p_i.
    """

    chains = [tuple(P.elements[i] for i in c) for c in strict_chains(P)]
    X = from_simplices(chains, vertex_key=P.index, close=False)
    logger.debug("Built order complex", extra={"elements": len(P), "f_vector": list(X.f_vector)})
    return X


def induced_simplicial_map(f: MonotoneMap, source: SimplicialSet | None = None,
                           target: SimplicialSet | None = None) -> SimplicialMap:
    """Map of order complexes induced by ``f``; collapsed chains are degenerate images."""

    source = source if source is not None else order_complex(f.source)
    target = target if target is not None else order_complex(f.target)
    images = []
    for d, dim_cells in enumerate(source.cells):
        dim_images = []
        for label in dim_cells:
            image = []
            for element in label:
                value = f(element)
                if not image or image[-1] != value:
                    image.append(value)
            core = tuple(image)
            dim_images.append(Image(len(core) - 1, target.index(len(core) - 1, core)))
        images.append(tuple(dim_images))
    return SimplicialMap(source=source, target=target, images=tuple(images))


def slice_poset(f: MonotoneMap, q: Hashable) -> Poset:
    """The induced subposet ``{p : f(p) <= q}`` (the slice ``f/q``)."""
    qi = f.target.index(q)
    below = f.target.down[qi]
    return f.source.subposet(i for i, fi in enumerate(f.assignment) if fi in below)


def linear_extensions(P: Poset) -> Iterator[tuple[Hashable, ...]]:
    """
    All total orders extending ``P``. At each step the available minimal
    elements are tried in index order, so the enumeration is lexicographic.
    """

    n = len(P)
    remaining_below = [len(P.down[i]) - 1 for i in range(n)]
    placed = [False] * n
    order: list[int] = []

    def extend() -> Iterator[tuple[Hashable, ...]]:
        if len(order) == n:
            yield tuple(P.elements[i] for i in order)
            return
        for i in range(n):
            if placed[i] or remaining_below[i]:
                continue
            placed[i] = True
            order.append(i)
            for j in P.strict_up(i):
                remaining_below[j] -= 1
            yield from extend()
            for j in P.strict_up(i):
                remaining_below[j] += 1
            order.pop()
            placed[i] = False

    yield from extend()


def simplex_poset(X: SimplicialSet) -> Poset:
    """
    Nondegenerate simplices of ``X`` ordered by the iterated-face relation.

    Elements are the simplex labels, which must be distinct across
    dimensions. Degenerate faces are followed to their cores.
    """

    offsets = []
    total = 0
    for d in range(X.dimension + 1):
        offsets.append(total)
        total += X.count(d)

    below: list[set[int]] = []
    for d in range(X.dimension + 1):
        for k in range(X.count(d)):
            own = {offsets[d] + k}
            for f in X.faces[d][k]:
                target = f.core_dim if f.degenerate else d - 1
                own |= below[offsets[target] + f.index]
            below.append(own)

    up: list[set[int]] = [set() for _ in range(total)]
    for i, faces in enumerate(below):
        for j in faces:
            up[j].add(i)
    elements = tuple(label for dim_cells in X.cells for label in dim_cells)
    return Poset(elements=elements, up=tuple(frozenset(u) for u in up))


def chain_poset(P: Poset) -> Poset:
    """
    Strict chains of ``P`` under the face relation: the subdivision model of
    the category of simplices of its nerve. Elements are element tuples.
    """
    return simplex_poset(order_complex(P))


@dataclass(frozen=True)
class Presheaf:
    """
    A set-valued presheaf on a finite poset.

    ``sections[p]`` is the tuple F(p); ``restrictions[(p, q)]`` for p <= q maps
    the index of an element of F(q) to the index of its restriction in F(p).
    """

    poset: Poset
    sections: tuple[tuple[Hashable, ...], ...]
    restrictions: Mapping[tuple[int, int], tuple[int, ...]]

    def restrict(self, p: int, q: int, k: int) -> int:
        if p == q:
            return k
        return self.restrictions[(p, q)][k]

    def validate(self) -> None:
        P = self.poset
        for p in range(len(P)):
            for q in P.up[p]:
                if p == q:
                    identity_map = self.restrictions.get((p, p))
                    if identity_map is not None and identity_map != tuple(range(len(self.sections[p]))):
                        raise InvalidPresheaf("Identity does not restrict by the identity.", element=str(P.elements[p]))
                    continue
                mapping = self.restrictions.get((p, q))
                if mapping is None or len(mapping) != len(self.sections[q]):
                    raise InvalidPresheaf("Missing restriction map.", lower=str(P.elements[p]), upper=str(P.elements[q]))
                if any(not 0 <= k < len(self.sections[p]) for k in mapping):
                    raise InvalidPresheaf("Restriction leaves the section set.", lower=str(P.elements[p]))
        for p in range(len(P)):
            for q in P.strict_up(p):
                for r in P.strict_up(q):
                    for k in range(len(self.sections[r])):
                        if self.restrict(p, q, self.restrict(q, r, k)) != self.restrict(p, r, k):
                            raise InvalidPresheaf(
                                "Restrictions do not compose.",
                                lower=str(P.elements[p]), middle=str(P.elements[q]), upper=str(P.elements[r]),
                            )

    def pullback(self, f: MonotoneMap) -> "Presheaf":
        """The presheaf ``F ∘ f`` on the source of ``f``."""
        if f.target is not self.poset and f.target != self.poset:
            raise InvalidPresheaf("Map does not land in the presheaf's poset.")
        S = f.source
        sections = tuple(self.sections[f.assignment[i]] for i in range(len(S)))
        restrictions = {}
        for p in range(len(S)):
            for q in S.strict_up(p):
                fp, fq = f.assignment[p], f.assignment[q]
                restrictions[(p, q)] = tuple(self.restrict(fp, fq, k) for k in range(len(self.sections[fq])))
        return Presheaf(poset=S, sections=sections, restrictions=restrictions)


def constant_presheaf(P: Poset, values: Sequence[Hashable]) -> Presheaf:
    values = tuple(values)
    ident = tuple(range(len(values)))
    return Presheaf(
        poset=P,
        sections=tuple(values for _ in range(len(P))),
        restrictions={(p, q): ident for p in range(len(P)) for q in P.strict_up(p)},
    )


def elements_poset(P: Poset, F: Presheaf) -> tuple[Poset, MonotoneMap]:
    """
    Category of elements of ``F``: pairs (p, x) with x in F(p), where
    (p, x) <= (q, y) iff p <= q and y restricts to x. Returns the poset and
    its projection to ``P``.
    """

    offsets = []
    elements = []
    for p in range(len(P)):
        offsets.append(len(elements))
        elements.extend((P.elements[p], x) for x in F.sections[p])

    up: list[frozenset[int]] = []
    owner: list[int] = []
    for p in range(len(P)):
        for k in range(len(F.sections[p])):
            above = {offsets[p] + k}
            for q in P.strict_up(p):
                mapping = F.restrictions[(p, q)]
                above.update(offsets[q] + y for y, x in enumerate(mapping) if x == k)
            up.append(frozenset(above))
            owner.append(p)

    E = Poset(elements=tuple(elements), up=tuple(up))
    return E, MonotoneMap(source=E, target=P, assignment=tuple(owner))


def to_dot(P: Poset, name: str = "poset", label: Callable[[Hashable], str] = str) -> str:
    """Hasse diagram in DOT, drawn bottom-up."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, element in enumerate(P.elements):
        text = label(element).replace('"', '\\"')
        lines.append(f'  n{i} [label="{text}"];')
    for i, j in P.cover_relations():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)


def hasse_diagram(P: Poset) -> list[tuple[Hashable, Hashable]]:
    return [(P.elements[i], P.elements[j]) for i, j in P.cover_relations()]
