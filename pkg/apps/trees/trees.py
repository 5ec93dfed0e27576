"""
Rooted trees with every vertex of arity at least two, encoded as laminar
families of leaf subsets.

Each member of the family is a vertex (the set of leaves above it); the
root is the full leaf set. A one-leaf tree has the empty family and is the
unit for grafting.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from django.conf import settings

from apps.core.exceptions import (
    LabelClash,
    LeafNotFound,
    MissingRoot,
    NotLaminar,
    NotLeafVertex,
    PartcxError,
    SmallBlock,
    TooLarge,
)
from apps.partitions.partitions import LeafSet, Partition, all_partitions
from apps.posets.posets import Poset

logger = logging.getLogger("partcx.trees")


@dataclass(frozen=True)
class Tree:
    leaves: LeafSet
    family: frozenset[frozenset[str]]

    @property
    def root(self) -> frozenset[str]:
        return frozenset(self.leaves.labels)

    def is_unit(self) -> bool:
        return len(self.leaves) == 1

    def is_corolla(self) -> bool:
        return len(self.leaves) > 1 and len(self.family) == 1

    def member_key(self, member: Iterable[str]) -> tuple[int, tuple[int, ...]]:
        positions = tuple(sorted(self.leaves.position(label) for label in member))
        return (-len(positions), positions)

    def vertices(self) -> tuple[frozenset[str], ...]:
        """Members in canonical order: larger first, then by leaf positions."""
        return tuple(sorted(self.family, key=self.member_key))

    def inner_edges(self) -> tuple[frozenset[str], ...]:
        return tuple(v for v in self.vertices() if v != self.root)

    def least_leaf(self, member: Iterable[str]) -> int:
        return min(self.leaves.position(label) for label in member)

    def children(self, member: frozenset[str]) -> tuple[frozenset[str], ...]:
        """
        Maximal members or singletons properly inside ``member``, ordered
        by least leaf.
        """
        inside = [m for m in self.family if m < member]
        maximal = [m for m in inside if not any(m < other for other in inside)]
        covered = set().union(*maximal) if maximal else set()
        found = maximal + [frozenset({label}) for label in member if label not in covered]
        return tuple(sorted(found, key=self.least_leaf))

    def arity(self, member: frozenset[str]) -> int:
        return len(self.children(member))

    def parent(self, member: frozenset[str]) -> frozenset[str] | None:
        above = [m for m in self.family if member < m]
        return min(above, key=len) if above else None

    def key(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.leaves.sort(v) for v in self.vertices())

    def as_lists(self) -> list[list[str]]:
        return [list(members) for members in self.key()]

    def __str__(self) -> str:
        if self.is_unit():
            return f"unit({self.leaves.labels[0]})"
        return "{" + ", ".join(self.leaves.join(v) for v in self.vertices()) + "}"


def validate(family: Iterable[Iterable[str]], leaves: LeafSet) -> Tree:
    """Check a candidate family and return it as a :class:`Tree`."""

    members = frozenset(frozenset(str(label) for label in m) for m in family)
    for m in members:
        for label in m:
            leaves.position(label)
        if len(m) < 2:
            raise SmallBlock(member=sorted(m))
    root = frozenset(leaves.labels)
    if len(leaves) >= 2 and root not in members:
        raise MissingRoot(leaves=list(leaves.labels))
    ordered = sorted(members, key=len)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1:]:
            if x & y and not x <= y:
                raise NotLaminar(left=sorted(x), right=sorted(y))
    tree = Tree(leaves=leaves, family=members)
    for m in members:
        if tree.arity(m) < 2:
            raise SmallBlock("Vertex has fewer than two children.", member=sorted(m))
    return tree


def parse_tree(leaves: LeafSet, text: str) -> Tree:
    """
    Read a tree from its non-root members separated by ``|``, e.g.
    ``ab|cde``; members of multi-character labels are comma separated.
    The root is implied.
    """

    members = [list(leaves.labels)]
    for part in (p.strip() for p in text.split("|")):
        if not part:
            continue
        if "," in part or not leaves.compact:
            members.append([label.strip() for label in part.split(",") if label.strip()])
        else:
            members.append(list(part))
    return validate(members, leaves)


def corolla(leaves: LeafSet) -> Tree:
    return Tree(leaves, frozenset({frozenset(leaves.labels)}) if len(leaves) > 1 else frozenset())


def unit(label: str) -> Tree:
    return Tree(LeafSet((label,)), frozenset())


def leaf_vertices(tree: Tree) -> tuple[frozenset[str], ...]:
    """Members containing no other member."""
    return tuple(v for v in tree.vertices() if not any(m < v for m in tree.family))


@lru_cache(maxsize=None)
def _tree_families(block: tuple[str, ...]) -> tuple[frozenset[frozenset[str]], ...]:
    """Every tree family on ``block``, by splitting the root and recursing on the parts."""
    if len(block) == 1:
        return (frozenset(),)
    root = frozenset(block)
    result = []
    for split in all_partitions(LeafSet(block)):
        if split.size < 2:
            continue
        parts = [tuple(sorted(b, key=block.index)) for b in split.blocks]
        for choice in product(*(_tree_families(part) for part in parts)):
            result.append(frozenset({root}).union(*choice))
    return tuple(result)


@dataclass(frozen=True)
class TreePoset:
    """T(A) or, without the corolla, T⁺(A), ordered by inclusion of families."""

    leaves: LeafSet
    poset: Poset
    include_corolla: bool

    @property
    def trees(self) -> tuple[Tree, ...]:
        return self.poset.elements

    def __len__(self) -> int:
        return len(self.poset)


def enumerate_trees(leaves: LeafSet, include_corolla: bool = True, max_leaves: int | None = None) -> TreePoset:
    """
    All trees on ``leaves``, smallest families first, ties broken by
    canonical key.
    """

    limit = max_leaves if max_leaves is not None else settings.PARTCX["MAX_TREE_LEAVES"]
    if len(leaves) > limit:
        raise TooLarge(leaves=len(leaves), limit=limit)
    return _enumerate_trees(leaves, include_corolla)


@lru_cache(maxsize=16)
def _enumerate_trees(leaves: LeafSet, include_corolla: bool) -> TreePoset:
    if len(leaves) == 1:
        trees = [unit(leaves.labels[0])]
    else:
        trees = [Tree(leaves, family) for family in _tree_families(leaves.labels)]
        if not include_corolla:
            trees = [t for t in trees if not t.is_corolla()]
    trees.sort(key=lambda t: (len(t.family), [t.member_key(v) for v in t.vertices()]))

    # up-sets by intersecting, over the members of a tree, the trees containing that member
    containing: dict[frozenset[str], int] = {}
    for k, t in enumerate(trees):
        for m in t.family:
            containing[m] = containing.get(m, 0) | (1 << k)
    everything = (1 << len(trees)) - 1
    up = []
    for t in trees:
        mask = everything
        for m in t.family:
            mask &= containing[m]
        up.append(frozenset(k for k in range(len(trees)) if mask >> k & 1))

    logger.debug("Enumerated trees", extra={"leaves": len(leaves), "trees": len(trees), "corolla": include_corolla})
    return TreePoset(leaves=leaves, poset=Poset(elements=tuple(trees), up=tuple(up)), include_corolla=include_corolla)


def marker(tree: Tree, member: frozenset[str]) -> str:
    """The fresh leaf label replacing a pruned leaf vertex."""
    return "ℓ_" + tree.leaves.join(member)


def prune(tree: Tree, W: Iterable[frozenset[str]]) -> Tree:
    """
    Remove the leaf vertices in ``W``: each becomes a fresh leaf
    ``ℓ_<members>`` appended after the remaining leaves.
    """

    pruned = sorted({frozenset(v) for v in W}, key=tree.member_key)
    if not pruned:
        raise PartcxError("Nothing to prune.", code="empty_prune")
    candidates = set(leaf_vertices(tree))
    for v in pruned:
        if v not in candidates:
            raise NotLeafVertex(member=sorted(v), tree=str(tree))

    removed = set().union(*pruned)
    markers = {v: marker(tree, v) for v in pruned}
    labels = [label for label in tree.leaves.labels if label not in removed] + [markers[v] for v in pruned]
    for label in markers.values():
        if label in tree.leaves:
            raise LabelClash(leaf=label)
    leaves = LeafSet(tuple(labels))

    family = []
    for m in tree.family:
        if m in markers:
            continue
        substituted = set(m)
        for v in pruned:
            if v <= m:
                substituted -= v
                substituted.add(markers[v])
        family.append(substituted)
    if len(leaves) == 1:
        family = []
    return validate(family, leaves)


def graft(tree: Tree, a: str, other: Tree) -> Tree:
    """Graft ``other`` onto the leaf ``a``; its leaves take ``a``'s place in order."""

    if a not in tree.leaves:
        raise LeafNotFound(leaf=a)
    clash = (set(tree.leaves.labels) - {a}) & set(other.leaves.labels)
    if clash:
        raise LabelClash(labels=sorted(clash))

    labels = []
    for label in tree.leaves.labels:
        labels.extend(other.leaves.labels if label == a else (label,))
    B = set(other.leaves.labels)
    family = [(set(m) - {a}) | B if a in m else set(m) for m in tree.family]
    family.extend(set(m) for m in other.family)
    return validate(family, LeafSet(tuple(labels)))


def relabel(tree: Tree, mapping: Mapping[str, str]) -> Tree:
    """Rename leaves; labels missing from ``mapping`` are kept."""

    labels = tuple(mapping.get(label, label) for label in tree.leaves.labels)
    if len(set(labels)) != len(labels):
        raise LabelClash(labels=list(labels))
    rename = dict(zip(tree.leaves.labels, labels))
    return validate([{rename[label] for label in m} for m in tree.family], LeafSet(labels))


def is_leq(S: Tree, T: Tree) -> bool:
    """``S <= T`` in the tree poset: ``T`` has every vertex of ``S``."""
    return S.leaves == T.leaves and S.family <= T.family


def vertex_poset(tree: Tree) -> Poset:
    """Vertices ordered root first (reverse inclusion)."""
    vertices = tree.vertices()
    return Poset(
        elements=vertices,
        up=tuple(frozenset(j for j, w in enumerate(vertices) if w <= v) for v in vertices),
    )


def partition_of(tree: Tree, members: Iterable[frozenset[str]]) -> Partition:
    """The partition whose non-singleton blocks are ``members``, the rest singletons."""
    members = list(members)
    covered = set().union(*members) if members else set()
    blocks = [sorted(m) for m in members] + [[label] for label in tree.leaves.labels if label not in covered]
    return Partition.from_blocks(tree.leaves, blocks)


def to_dot(tree: Tree, name: str = "tree") -> str:
    """The tree drawn root at the top, leaves at the bottom."""

    lines = [f"digraph {name} {{", "  node [shape=point];"]
    ids = {v: f"v{k}" for k, v in enumerate(tree.vertices())}
    for label in tree.leaves.labels:
        lines.append(f'  "leaf_{label}" [shape=plaintext, label="{label}"];')
    for v, node in ids.items():
        for child in tree.children(v):
            target = ids[child] if child in ids else f'"leaf_{next(iter(child))}"'
            lines.append(f"  {node} -> {target};")
    lines.append("}")
    return "\n".join(lines)
