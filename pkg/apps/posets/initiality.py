"""
Homotopy-initiality of monotone maps between finite posets, certified by
reduced integral homology of the slices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Hashable

from apps.core.parallel import ordered_map
from apps.simplicial.chains import INTEGERS, HomologyResult, simplicial_homology

from .posets import MonotoneMap, Poset, order_complex, slice_poset

logger = logging.getLogger("partcx.posets")

SD_MODEL = "sd-model"


@dataclass(frozen=True)
class SliceResult:
    element: Hashable
    size: int
    homology: HomologyResult | None
    passed: bool
    reason: str = ""


@dataclass(frozen=True)
class InitialityReport:
    passed: bool
    model: str
    slices: tuple[SliceResult, ...]
    consequence: dict[str, Any] | None = None
    failures: tuple[SliceResult, ...] = field(default=())

    @property
    def checked(self) -> int:
        return len(self.slices)


def _slice_homology(args: tuple[Poset, str]) -> HomologyResult | None:
    P, ring = args
    if not len(P):
        return None
    return simplicial_homology(order_complex(P), ring=ring, reduced=True)


def order_homology(P: Poset, ring: str = INTEGERS) -> HomologyResult:
    """Reduced homology of the order complex of ``P``."""
    return simplicial_homology(order_complex(P), ring=ring, reduced=True)


def check_homotopy_initial(
    f: MonotoneMap,
    jobs: int = 1,
    ring: str = INTEGERS,
    consequence: bool = True,
    model: str = SD_MODEL,
) -> InitialityReport:
    """
    For every ``q`` in the target, the slice ``f/q`` must be nonempty with
    vanishing reduced homology. When every slice passes and ``consequence``
    is set, the order complexes of source and target are also compared.
    """

    target = f.target
    slices = [slice_poset(f, q) for q in target.elements]
    homologies = ordered_map(_slice_homology, [(P, ring) for P in slices], jobs=jobs)

    results = []
    for q, P, H in zip(target.elements, slices, homologies):
        if H is None:
            results.append(SliceResult(q, 0, None, False, "empty slice"))
        elif not H.is_acyclic():
            results.append(SliceResult(q, len(P), H, False, "nonvanishing reduced homology"))
        else:
            results.append(SliceResult(q, len(P), H, True))
    failures = tuple(r for r in results if not r.passed)
    passed = not failures

    summary = None
    if passed and consequence:
        source_h = order_homology(f.source, ring)
        target_h = order_homology(target, ring)
        summary = {
            "source": source_h,
            "target": target_h,
            "match": source_h.matches(target_h),
        }
        if not summary["match"]:
            logger.warning(
                "Initial map does not induce equal homology",
                extra={"source": source_h.describe(), "target": target_h.describe()},
            )
            passed = False

    logger.info(
        "Checked homotopy initiality",
        extra={"slices": len(results), "failures": len(failures), "passed": passed},
    )
    return InitialityReport(
        passed=passed, model=model, slices=tuple(results), consequence=summary, failures=failures,
    )
