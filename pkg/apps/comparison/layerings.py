"""
The functor from chains of partitions to trees, layerings, the complexes
L(T) and L^v(T), and explicit cone identifications.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from apps.core.exceptions import NotInTPlus, NotLeafVertex, PartcxError, WitnessFailed
from apps.partitions.partitions import Chain, LeafSet, Partition, is_elementary, partition_poset
from apps.posets.posets import linear_extensions, order_complex
from apps.simplicial.complexes import (
    Image,
    IsoCheck,
    SimplicialMap,
    SimplicialSet,
    check_simplicial_iso,
    cone,
    empty,
    from_simplices,
)
from apps.trees.trees import Tree, leaf_vertices, marker, partition_of, prune, vertex_poset

logger = logging.getLogger("partcx.comparison")


def phi(sigma: Sequence[Partition]) -> Tree:
    """Forget the layers of a chain and delete unary vertices."""
    leaves = sigma[0].leaves
    family = {frozenset(leaves.labels)}
    for c in sigma:
        family.update(c.nonsingleton_blocks())
    return Tree(leaves=leaves, family=frozenset(family))


@dataclass(frozen=True)
class Layering:
    chain: Chain
    tree: Tree
    elementary: bool
    extension: tuple[frozenset[str], ...] | None = None

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    @property
    def top(self) -> frozenset[str] | None:
        return self.extension[-1] if self.extension else None


def _layer(tree: Tree, rest: Sequence[frozenset[str]]) -> Partition:
    maximal = [m for m in rest if not any(m < other for other in rest)]
    return partition_of(tree, maximal)


def elementary_layerings(tree: Tree) -> list[Layering]:
    """
    One elementary layering per root-first linear extension of the vertices.
    The i-th partition has as blocks the maximal vertices among those placed
    after position i + 1, padded with singletons.
    """

    if tree.is_corolla() or tree.is_unit():
        raise NotInTPlus(tree=str(tree))
    layerings = []
    for extension in linear_extensions(vertex_poset(tree)):
        k = len(extension)
        sigma = tuple(_layer(tree, extension[i + 1:]) for i in range(k - 1))
        if phi(sigma) != tree or not is_elementary(sigma):
            raise PartcxError(
                "Linear extension does not give an elementary layering.",
                code="layering_mismatch", tree=str(tree), chain=[str(c) for c in sigma],
            )
        layerings.append(Layering(chain=sigma, tree=tree, elementary=True, extension=tuple(extension)))
    return layerings


def _partition_key(c: Partition) -> tuple[int, ...]:
    return c.rgs


def layering_complex(tree: Tree) -> SimplicialSet:
    """
    L(T): chains whose image under ``phi`` is a subtree of ``tree``. Empty for
    the corolla.
    """

    if tree.is_corolla() or tree.is_unit():
        return empty()
    P = partition_poset(tree.leaves)
    inner = set(tree.inner_edges())
    keep = [i for i, c in enumerate(P.elements) if set(c.nonsingleton_blocks()) <= inner]
    return order_complex(P.subposet(keep))


def layering_faces(layerings: Iterable[Layering]) -> set[Chain]:
    faces: set[Chain] = set()
    for layering in layerings:
        chain = layering.chain
        for mask in range(1, 1 << len(chain)):
            faces.add(tuple(c for i, c in enumerate(chain) if mask >> i & 1))
    return faces


def _complex_of(chains: Iterable[Chain]) -> SimplicialSet:
    return from_simplices(sorted(chains, key=lambda s: [c.rgs for c in s]), vertex_key=_partition_key, close=False)


def top_faces(tree: Tree, v: frozenset[str]) -> set[Chain]:
    if v not in leaf_vertices(tree):
        raise NotLeafVertex(member=sorted(v), tree=str(tree))
    return layering_faces(layer for layer in elementary_layerings(tree) if layer.top == v)


def Lv(tree: Tree, v: frozenset[str]) -> SimplicialSet:
    """L^v(T): faces of the elementary layerings with ``v`` last."""
    return _complex_of(top_faces(tree, v))


def expand(c: Partition, original: Tree, markers: dict[str, frozenset[str]]) -> Partition:
    """Partition of the original leaves with every marker put back as its block."""
    blocks = []
    for block in c.blocks:
        members: set[str] = set()
        for label in block:
            members |= markers.get(label, {label})
        blocks.append(members)
    return Partition.from_blocks(original.leaves, blocks)


@dataclass(frozen=True)
class ConeWitness:
    tree: Tree
    subset: tuple[frozenset[str], ...]
    source: SimplicialSet
    target: SimplicialSet
    map: SimplicialMap
    check: IsoCheck

    @property
    def ok(self) -> bool:
        return self.check.ok


def cone_witness(tree: Tree, W: Iterable[frozenset[str]], strict: bool = False) -> ConeWitness:
    """
    Identify the cone on L(prune(T, W)) with the intersection of the L^v(T)
    over ``v`` in ``W``. Base chains are expanded back to partitions of the
    original leaves; the apex and the cone point go to the partition whose
    non-singleton blocks are exactly ``W``.
    """

    subset = tuple(sorted({frozenset(v) for v in W}, key=tree.member_key))
    if not subset:
        raise PartcxError("Cone witnesses need a nonempty set of leaf vertices.", code="empty_subset")
    candidates = set(leaf_vertices(tree))
    for v in subset:
        if v not in candidates:
            raise NotLeafVertex(member=sorted(v), tree=str(tree))

    pruned = prune(tree, subset)
    markers = {marker(tree, v): v for v in subset}
    base = layering_complex(pruned)
    source, _ = cone(base)

    faces = set.intersection(*(top_faces(tree, v) for v in subset))
    target = _complex_of(faces)
    top = partition_of(tree, subset)

    def image_label(label) -> tuple[Partition, ...]:
        if label[0] == "apex":
            return (top,)
        expanded = tuple(expand(c, tree, markers) for c in label[1])
        return expanded + (top,) if label[0] == "cone" else expanded

    images = []
    for d, dim_cells in enumerate(source.cells):
        dim_images = []
        for label in dim_cells:
            k = target.index(d, image_label(label))
            dim_images.append(None if k is None else Image(d, k))
        images.append(tuple(dim_images))
    m = SimplicialMap(source=source, target=target, images=tuple(images))
    check = check_simplicial_iso(source, target, m)

    if not check.ok:
        logger.warning(
            "Cone witness failed",
            extra={"tree": str(tree), "subset": [sorted(v) for v in subset], "reason": check.counterexample},
        )
        if strict:
            raise WitnessFailed(tree=str(tree), subset=[sorted(v) for v in subset], counterexample=check.counterexample)
    return ConeWitness(tree=tree, subset=subset, source=source, target=target, map=m, check=check)


def chain_to_dot(sigma: Sequence[Partition], name: str = "layered") -> str:
    """A layered tree: one row of nodes per partition, edges to the refined blocks."""

    leaves: LeafSet = sigma[0].leaves
    levels = [(0, (frozenset(leaves.labels),))] + [(i + 1, c.blocks) for i, c in enumerate(sigma)]
    levels.append((len(sigma) + 1, tuple(frozenset({label}) for label in leaves.labels)))
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for depth, blocks in levels:
        row = " ".join(f'"{depth}:{leaves.join(b)}";' for b in blocks)
        lines.append(f"  {{ rank=same; {row} }}")
    for (depth, blocks), (_, finer) in zip(levels, levels[1:]):
        for b in blocks:
            for f in finer:
                if f <= b:
                    lines.append(f'  "{depth}:{leaves.join(b)}" -> "{depth + 1}:{leaves.join(f)}";')
    lines.append("}")
    return "\n".join(lines)


__all__ = [
    "ConeWitness",
    "Layering",
    "Lv",
    "chain_to_dot",
    "cone_witness",
    "elementary_layerings",
    "layering_complex",
    "phi",
]
