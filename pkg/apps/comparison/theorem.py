"""
Verification campaigns for the comparison functors.

Per tree of T⁺(A) the campaign checks that the layering complex is
covered by the L^v, that every cone identification is an isomorphism, that
L(T) is acyclic and that the matching slice of the chain model agrees with it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Sequence

from apps.core.exceptions import NotInTPlus
from apps.core.parallel import ordered_map
from apps.partitions.partitions import Chain, LeafSet, Partition, partition_poset
from apps.posets.initiality import InitialityReport, check_homotopy_initial, order_homology
from apps.posets.posets import MonotoneMap, Poset, chain_poset, monotone_map, slice_poset
from apps.simplicial.chains import INTEGERS, HomologyResult, simplicial_homology
from apps.trees.trees import Tree, enumerate_trees, leaf_vertices

from .layerings import Lv, cone_witness, layering_complex, phi

logger = logging.getLogger("partcx.comparison")


@dataclass(frozen=True)
class ConeResult:
    subset: tuple[frozenset[str], ...]
    ok: bool
    counterexample: dict[str, Any] | None = None


@dataclass(frozen=True)
class TreeReport:
    tree: Tree
    cover_ok: bool
    cones: tuple[ConeResult, ...]
    homology: HomologyResult
    slice_homology: HomologyResult
    slice_match: bool
    cover_counterexample: dict[str, Any] | None = None

    @property
    def key(self) -> str:
        return item_key(self.tree)

    @property
    def cone_ok(self) -> bool:
        return all(c.ok for c in self.cones)

    @property
    def passed(self) -> bool:
        return self.cover_ok and self.cone_ok and self.homology.is_acyclic() and self.slice_match


@dataclass(frozen=True)
class TheoremReport:
    leaves: LeafSet
    ring: str
    passed: bool
    trees: tuple[TreeReport, ...] = ()
    vacuous: bool = False
    initiality: InitialityReport | None = None
    failures: tuple[TreeReport, ...] = field(default=())


def item_key(tree: Tree) -> str:
    """Canonical serialization; campaign items are ordered and resumed by it."""
    return str(tree)


def zeta(sigma: Sequence[Partition]) -> Partition:
    """The last vertex of a chain."""
    return sigma[-1]


def tplus_poset(leaves: LeafSet) -> Poset:
    return enumerate_trees(leaves, include_corolla=False).poset


@lru_cache(maxsize=8)
def phi_model(leaves: LeafSet) -> MonotoneMap:
    """φ on the chain poset of P(A), landing in T⁺(A)."""
    return monotone_map(chain_poset(partition_poset(leaves)), tplus_poset(leaves), phi)


def zeta_model(P: Poset) -> MonotoneMap:
    return monotone_map(chain_poset(P), P, zeta)


def check_cover(tree: Tree, L=None) -> tuple[bool, dict[str, Any] | None]:
    """
    ``L(T)`` equals the union of the ``L^v(T)`` over leaf vertices ``v``,
    compared simplex by simplex.
    """

    L = L if L is not None else layering_complex(tree)
    union: set = set()
    for v in leaf_vertices(tree):
        union |= Lv(tree, v).labels()
    expected = L.labels()
    missing = sorted(expected - union, key=str)
    if missing:
        d, label = missing[0]
        return False, {"reason": "simplex outside every L^v", "dimension": d, "simplex": _chain_text(label)}
    extra = sorted(union - expected, key=str)
    if extra:
        d, label = extra[0]
        return False, {"reason": "L^v simplex outside L", "dimension": d, "simplex": _chain_text(label)}
    return True, None


def _chain_text(label: Chain) -> str:
    return " < ".join(str(c) for c in label)


def cone_subsets(tree: Tree, max_size: int = 0) -> list[tuple[frozenset[str], ...]]:
    """Nonempty sets of leaf vertices, smallest first; ``max_size`` 0 means no cap."""
    candidates = leaf_vertices(tree)
    top = len(candidates) if max_size <= 0 else min(max_size, len(candidates))
    return [subset for size in range(1, top + 1) for subset in combinations(candidates, size)]


def verify_tree(tree: Tree, ring: str = INTEGERS, max_cone_subset: int = 0) -> TreeReport:
    if tree.is_corolla() or tree.is_unit():
        raise NotInTPlus(tree=str(tree))
    L = layering_complex(tree)
    cover_ok, cover_counterexample = check_cover(tree, L)

    cones = []
    for subset in cone_subsets(tree, max_cone_subset):
        witness = cone_witness(tree, subset)
        cones.append(ConeResult(subset=subset, ok=witness.ok, counterexample=witness.check.counterexample))

    H = simplicial_homology(L, ring=ring, reduced=True)
    slice_h = order_homology(slice_poset(phi_model(tree.leaves), tree), ring)
    report = TreeReport(
        tree=tree,
        cover_ok=cover_ok,
        cover_counterexample=cover_counterexample,
        cones=tuple(cones),
        homology=H,
        slice_homology=slice_h,
        slice_match=slice_h.matches(H),
    )
    if not report.passed:
        logger.warning(
            "Tree failed verification",
            extra={"tree": report.key, "cover_ok": cover_ok, "cone_ok": report.cone_ok,
                   "homology": H.describe(), "slice_match": report.slice_match},
        )
    return report


def _verify_unit(args: tuple[Tree, str, int]) -> TreeReport:
    tree, ring, max_cone_subset = args
    return verify_tree(tree, ring=ring, max_cone_subset=max_cone_subset)


def theorem_units(leaves: LeafSet, ring: str = INTEGERS, max_cone_subset: int = 0,
                  tree: Tree | None = None) -> list[tuple[str, tuple[Tree, str, int]]]:
    """Work units keyed by tree, in canonical order."""
    trees = [tree] if tree is not None else list(tplus_poset(leaves).elements)
    trees.sort(key=item_key)
    return [(item_key(t), (t, ring, max_cone_subset)) for t in trees]


def verify_phi(leaves: LeafSet, jobs: int = 1, ring: str = INTEGERS) -> InitialityReport:
    return check_homotopy_initial(phi_model(leaves), jobs=jobs, ring=ring)


def verify_theorem(
    leaves: LeafSet,
    ring: str = INTEGERS,
    jobs: int = 1,
    max_cone_subset: int = 0,
    tree: Tree | None = None,
    initiality: bool = False,
) -> TheoremReport:
    """
    Run the per-tree checks over T⁺(A), or over a single tree.

    With two leaves there are neither chains nor trees and the report is a
    vacuous pass. ``initiality`` adds the slice check of the whole φ model.
    """

    if len(leaves) == 2 and tree is None:
        logger.info("Vacuous theorem run", extra={"leaves": list(leaves.labels)})
        return TheoremReport(leaves=leaves, ring=ring, passed=True, vacuous=True)

    units = theorem_units(leaves, ring, max_cone_subset, tree)
    logger.info("Starting theorem campaign", extra={"leaves": len(leaves), "trees": len(units), "jobs": jobs})
    reports = tuple(ordered_map(_verify_unit, [unit for _, unit in units], jobs=jobs))
    failures = tuple(r for r in reports if not r.passed)

    phi_report = verify_phi(leaves, jobs=jobs, ring=ring) if initiality else None
    passed = not failures and (phi_report is None or phi_report.passed)
    logger.info(
        "Finished theorem campaign",
        extra={"leaves": len(leaves), "trees": len(reports), "failures": len(failures), "passed": passed},
    )
    return TheoremReport(
        leaves=leaves, ring=ring, passed=passed, trees=reports, initiality=phi_report, failures=failures,
    )


def verify_zeta(P: Poset, jobs: int = 1, ring: str = INTEGERS) -> InitialityReport:
    """Initiality of the last-vertex map from the chains of ``P`` to ``P``."""
    return check_homotopy_initial(zeta_model(P), jobs=jobs, ring=ring)
