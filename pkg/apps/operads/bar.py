"""
Two models of the bar construction of a finite operad at a leaf set A.

The layered model has as degree-p basis the strict chains 0̂ = c_0 < ... <
c_p = 1̂ through the full partition lattice with one operation per block and
layer. The tree model is the suspended cofiber of the inclusion of the
elements of the nerve over T⁺(A) into those over T(A).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from apps.partitions.partitions import LeafSet, Partition, partition_poset
from apps.posets.posets import elements_poset, induced_simplicial_map, monotone_map, strict_chains
from apps.simplicial.chains import (
    INTEGERS,
    RATIONALS,
    ChainComplex,
    HomologyResult,
    SparseMatrix,
    chain_map,
    homology,
    mapping_cone,
)
from apps.trees.trees import enumerate_trees

from .nerve import nerve
from .operads import FiniteOperad, sort_permutation

logger = logging.getLogger("partcx.operads")


@dataclass(frozen=True)
class BarGenerator:
    """
    ``labels[i]`` holds, for each block of ``chain[i]`` in block order, the
    operation applied to its blocks in ``chain[i + 1]``.
    """

    chain: tuple[Partition, ...]
    labels: tuple[tuple[str, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.chain) - 1


def _inside(c: Partition, block: frozenset[str]) -> tuple[frozenset[str], ...]:
    return tuple(b for b in c.blocks if b <= block)


def _layer_choices(O: FiniteOperad, upper: Partition, lower: Partition) -> list[tuple[str, ...]]:
    return [O.ops(len(_inside(lower, block))) for block in upper.blocks]


def bar_generators(O: FiniteOperad, leaves: LeafSet) -> dict[int, list[BarGenerator]]:
    P = partition_poset(leaves)
    bottom, top = Partition.indiscrete(leaves), Partition.discrete(leaves)
    inner = [()] + [tuple(P.elements[i] for i in c) for c in strict_chains(P)]
    basis: dict[int, list[BarGenerator]] = {p: [] for p in range(1, len(leaves))}
    for middle in sorted(inner, key=lambda c: (len(c), [x.rgs for x in c])):
        chain = (bottom,) + middle + (top,)
        layers = [tuple(product(*_layer_choices(O, upper, lower))) for upper, lower in zip(chain, chain[1:])]
        for labels in product(*layers):
            basis[len(chain) - 1].append(BarGenerator(chain=chain, labels=labels))
    return basis


def merge_layers(O: FiniteOperad, g: BarGenerator, i: int) -> BarGenerator:
    """
    The inner face d_i: drop ``chain[i]`` and compose the operations of
    layers i and i + 1 block by block.
    """

    upper, middle, lower = g.chain[i - 1], g.chain[i], g.chain[i + 1]
    merged = []
    for b, block in enumerate(upper.blocks):
        children = _inside(middle, block)
        child_ops = [g.labels[i][middle.blocks.index(child)] for child in children]
        composed = O.compose(g.labels[i - 1][b], child_ops)
        inputs = tuple(x for child in children for x in _inside(lower, child))
        merged.append(O.act(composed, sort_permutation(inputs, _inside(lower, block))))
    return BarGenerator(
        chain=g.chain[:i] + g.chain[i + 1:],
        labels=g.labels[:i - 1] + (tuple(merged),) + g.labels[i + 1:],
    )


def bar_complex(O: FiniteOperad, leaves: LeafSet, ring: str = INTEGERS) -> ChainComplex:
    """Normalized bar complex; the outer faces vanish on strict chains, ∂ = Σ_{0<i<p} (-1)^i d_i."""

    basis = bar_generators(O, leaves)
    index = {p: {g: k for k, g in enumerate(gens)} for p, gens in basis.items()}
    boundaries = {}
    for p, gens in basis.items():
        if p < 2:
            continue
        columns = []
        for g in gens:
            column: dict[int, int] = {}
            for i in range(1, p):
                r = index[p - 1][merge_layers(O, g, i)]
                column[r] = column.get(r, 0) + (-1) ** i
            columns.append({r: v for r, v in column.items() if v})
        boundaries[p] = SparseMatrix(len(basis[p - 1]), len(gens), tuple(columns))
    C = ChainComplex(ring=ring, ranks={p: len(gens) for p, gens in basis.items()}, boundaries=boundaries)
    C.validate()
    logger.debug("Built bar complex", extra={"operad": O.name, "leaves": len(leaves), "ranks": dict(C.ranks)})
    return C


def tree_bar_complex(O: FiniteOperad, leaves: LeafSet, ring: str = INTEGERS) -> ChainComplex:
    """
    Suspension of the cofiber of the inclusion of order complexes of the
    elements of N O over T⁺(A) into those over T(A).
    """

    F = nerve(O, leaves, include_corolla=True)
    tplus = enumerate_trees(leaves, include_corolla=False).poset
    included = monotone_map(tplus, F.poset, lambda T: T)
    E, _ = elements_poset(F.poset, F)
    E_plus, _ = elements_poset(tplus, F.pullback(included))
    inclusion = monotone_map(E_plus, E, lambda element: element)
    f = chain_map(induced_simplicial_map(inclusion), ring=ring)
    f.validate()
    C = mapping_cone(f).shift(1)
    C.validate()
    logger.debug(
        "Built tree bar complex",
        extra={"operad": O.name, "leaves": len(leaves), "elements": len(E), "boundary_elements": len(E_plus)},
    )
    return C


@dataclass(frozen=True)
class RingComparison:
    ring: str
    bar: HomologyResult
    tree: HomologyResult

    @property
    def match(self) -> bool:
        return self.bar.matches(self.tree)


@dataclass(frozen=True)
class BarReport:
    operad: str
    leaves: LeafSet
    rings: tuple[RingComparison, ...]

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rings)


def compare_bars(O: FiniteOperad, leaves: LeafSet, rings: tuple[str, ...] = (INTEGERS, RATIONALS)) -> BarReport:
    rows = []
    for ring in rings:
        row = RingComparison(
            ring=ring,
            bar=homology(bar_complex(O, leaves, ring)),
            tree=homology(tree_bar_complex(O, leaves, ring)),
        )
        if not row.match:
            logger.warning(
                "Bar models disagree",
                extra={"operad": O.name, "ring": ring, "bar": row.bar.describe(), "tree": row.tree.describe()},
            )
        rows.append(row)
    return BarReport(operad=O.name, leaves=leaves, rings=tuple(rows))
