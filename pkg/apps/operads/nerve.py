"""
The nerve of an operad as a presheaf on trees, and the labelled partition
complex with its comparison map.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from apps.comparison.layerings import phi
from apps.partitions.partitions import LeafSet, partition_poset
from apps.posets.initiality import InitialityReport, check_homotopy_initial
from apps.posets.posets import MonotoneMap, Poset, Presheaf, elements_poset, monotone_map, simplex_poset, strict_chains
from apps.simplicial.chains import INTEGERS, HomologyResult, simplicial_homology
from apps.simplicial.complexes import SimplicialSet, build
from apps.trees.trees import Tree, enumerate_trees

from .operads import FiniteOperad, sort_permutation

logger = logging.getLogger("partcx.operads")

Labelling = tuple[str, ...]


def labellings(O: FiniteOperad, tree: Tree) -> tuple[Labelling, ...]:
    """Every choice of operation per vertex, aligned with ``tree.vertices()``."""
    choices = [O.ops(tree.arity(v)) for v in tree.vertices()]
    return tuple(product(*choices))


def contract(O: FiniteOperad, tree: Tree, labels: dict[frozenset[str], str],
             v: frozenset[str]) -> tuple[Tree, dict[frozenset[str], str]]:
    """Collapse the inner edge above ``v``, composing its operation into the parent."""

    parent = tree.parent(v)
    outer = tree.children(parent)
    i = outer.index(v)
    inputs = outer[:i] + tree.children(v) + outer[i + 1:]
    smaller = Tree(leaves=tree.leaves, family=tree.family - {v})
    composed = O.compose_at(labels[parent], i, labels[v])
    merged = dict(labels)
    del merged[v]
    merged[parent] = O.act(composed, sort_permutation(inputs, smaller.children(parent)))
    return smaller, merged


def restrict(O: FiniteOperad, tree: Tree, labelling: Sequence[str], smaller: Tree,
             order: Iterable[frozenset[str]] | None = None) -> Labelling:
    """
    Restrict a labelling of ``tree`` to ``smaller``, a tree with fewer
    vertices, by contracting the missing edges one at a time (in ``order``,
    canonical vertex order by default).
    """

    labels = dict(zip(tree.vertices(), labelling))
    missing = [v for v in tree.vertices() if v not in smaller.family]
    current = tree
    for v in (order if order is not None else missing):
        current, labels = contract(O, current, labels, v)
    return tuple(labels[v] for v in smaller.vertices())


def nerve(O: FiniteOperad, leaves: LeafSet, include_corolla: bool = True) -> Presheaf:
    """N O on T(A), or on T⁺(A) without the corolla."""

    P = enumerate_trees(leaves, include_corolla=include_corolla).poset
    sections = tuple(labellings(O, T) for T in P.elements)
    lookup = [{labelling: k for k, labelling in enumerate(s)} for s in sections]
    restrictions = {}
    for p in range(len(P)):
        for q in P.strict_up(p):
            restrictions[(p, q)] = tuple(
                lookup[p][restrict(O, P.elements[q], labelling, P.elements[p])] for labelling in sections[q]
            )
    logger.debug(
        "Built operad nerve",
        extra={"operad": O.name, "leaves": len(leaves), "trees": len(P), "sections": sum(map(len, sections))},
    )
    return Presheaf(poset=P, sections=sections, restrictions=restrictions)


def labelled_complex(O: FiniteOperad, leaves: LeafSet) -> tuple[SimplicialSet, Poset, MonotoneMap]:
    """
    NP(A) with every chain labelled by a labelling of its tree; faces
    restrict the labelling. Returns the complex, the elements poset of the
    nerve over T⁺(A) and the comparison map from the simplices of the
    complex to it.
    """

    P = partition_poset(leaves)
    chains = [tuple(P.elements[i] for i in c) for c in strict_chains(P)]
    by_dim: dict[int, list] = {}
    for sigma in chains:
        T = phi(sigma)
        by_dim.setdefault(len(sigma) - 1, []).extend((sigma, labelling) for labelling in labellings(O, T))

    cells = [by_dim.get(d, []) for d in range(max(by_dim, default=-1) + 1)]
    index = [{cell: k for k, cell in enumerate(dim_cells)} for dim_cells in cells]
    faces = [[() for _ in cells[0]]] if cells else []
    for d in range(1, len(cells)):
        dim_faces = []
        for sigma, labelling in cells[d]:
            T = phi(sigma)
            simplex_faces = []
            for i in range(d + 1):
                face = sigma[:i] + sigma[i + 1:]
                restricted = restrict(O, T, labelling, phi(face))
                simplex_faces.append(index[d - 1][(face, restricted)])
            dim_faces.append(tuple(simplex_faces))
        faces.append(dim_faces)
    X = build(cells, faces)

    F = nerve(O, leaves, include_corolla=False)
    E, _ = elements_poset(F.poset, F)
    f = monotone_map(simplex_poset(X), E, lambda cell: (phi(cell[0]), cell[1]))
    logger.info(
        "Built labelled partition complex",
        extra={"operad": O.name, "leaves": len(leaves), "f_vector": list(X.f_vector), "elements": len(E)},
    )
    return X, E, f


@dataclass(frozen=True)
class LabelledReport:
    operad: str
    leaves: LeafSet
    passed: bool
    initiality: InitialityReport
    complex_homology: HomologyResult
    f_vector: tuple[int, ...]


def verify_labelled_comparison(O: FiniteOperad, leaves: LeafSet, jobs: int = 1,
                               ring: str = INTEGERS) -> LabelledReport:
    """
    Initiality of the labelled comparison map, plus agreement of the labelled
    complex's own homology with both sides.
    """

    X, _, f = labelled_complex(O, leaves)
    report = check_homotopy_initial(f, jobs=jobs, ring=ring)
    H = simplicial_homology(X, ring=ring, reduced=True)
    agrees = report.consequence is not None and H.matches(report.consequence["target"])
    if report.passed and not agrees:
        logger.warning("Labelled complex homology differs", extra={"operad": O.name, "homology": H.describe()})
    return LabelledReport(
        operad=O.name,
        leaves=leaves,
        passed=report.passed and agrees,
        initiality=report,
        complex_homology=H,
        f_vector=X.f_vector,
    )
