"""
Set partitions of a finite leaf set and the poset of nontrivial partitions.

Partitions are ordered coarse below fine: ``c <= d`` when every block of
``d`` lies inside a block of ``c``. They are stored as restricted-growth
strings over the canonical leaf order, so equal partitions compare and
hash equal.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from string import ascii_lowercase
from typing import Iterable, Iterator, Sequence

from apps.core.exceptions import LeafNotFound, LabelClash, LeafSetMismatch, PartcxError, TooSmall
from apps.posets.posets import Poset

logger = logging.getLogger("partcx.partitions")


@dataclass(frozen=True)
class LeafSet:
    labels: tuple[str, ...]
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise TooSmall("A leaf set needs at least one label.")
        if len(set(labels)) != len(labels):
            raise LabelClash(labels=list(labels))
        object.__setattr__(self, "_position", {label: i for i, label in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> "LeafSet":
        """Leaves ``a, b, c, ...`` (numbered ``1..n`` beyond the alphabet)."""
        if n <= len(ascii_lowercase):
            return cls(tuple(ascii_lowercase[:n]))
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "LeafSet":
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._position

    def position(self, label: str) -> int:
        try:
            return self._position[label]
        except KeyError as exc:
            raise LeafNotFound(leaf=label) from exc

    def sort(self, labels: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(labels, key=self.position))

    @property
    def compact(self) -> bool:
        """Whether every label is a single character."""
        return all(len(label) == 1 for label in self.labels)

    def join(self, labels: Iterable[str]) -> str:
        return ("" if self.compact else ",").join(self.sort(labels))


@dataclass(frozen=True)
class Partition:
    leaves: LeafSet
    rgs: tuple[int, ...]

    @classmethod
    def from_blocks(cls, leaves: LeafSet, blocks: Iterable[Iterable[str]]) -> "Partition":
        rgs = [-1] * len(leaves)
        for b, block in enumerate(blocks):
            members = list(block)
            if not members:
                raise PartcxError("Empty block.", code="invalid_partition")
            for label in members:
                i = leaves.position(label)
                if rgs[i] != -1:
                    raise PartcxError("Blocks overlap.", code="invalid_partition", leaf=label)
                rgs[i] = b
        if -1 in rgs:
            raise PartcxError("Blocks do not cover the leaf set.", code="invalid_partition")
        return cls(leaves, _canonical(rgs))

    @classmethod
    def parse(cls, leaves: LeafSet, text: str) -> "Partition":
        """
        Parse ``(ab)(cde)(f)``; blocks of multi-character labels are
        comma separated, as in ``(a1,a2)(b)``.
        """
        groups = re.findall(r"\(([^()]*)\)", text)
        blocks = []
        for group in groups:
            if "," in group or not leaves.compact:
                blocks.append([part.strip() for part in group.split(",") if part.strip()])
            else:
                blocks.append(list(group))
        return cls.from_blocks(leaves, blocks)

    @classmethod
    def indiscrete(cls, leaves: LeafSet) -> "Partition":
        return cls(leaves, (0,) * len(leaves))

    @classmethod
    def discrete(cls, leaves: LeafSet) -> "Partition":
        return cls(leaves, tuple(range(len(leaves))))

    @property
    def size(self) -> int:
        return max(self.rgs) + 1

    @property
    def blocks(self) -> tuple[frozenset[str], ...]:
        """Blocks ordered by their least leaf."""
        grouped: list[list[str]] = [[] for _ in range(self.size)]
        for label, b in zip(self.leaves.labels, self.rgs):
            grouped[b].append(label)
        return tuple(frozenset(block) for block in grouped)

    def nonsingleton_blocks(self) -> tuple[frozenset[str], ...]:
        return tuple(block for block in self.blocks if len(block) > 1)

    def block_of(self, label: str) -> frozenset[str]:
        return self.blocks[self.rgs[self.leaves.position(label)]]

    def is_trivial(self) -> bool:
        return self.size in (1, len(self.leaves))

    def as_lists(self) -> list[list[str]]:
        return [list(self.leaves.sort(block)) for block in self.blocks]

    def __str__(self) -> str:
        return "".join(f"({self.leaves.join(block)})" for block in self.blocks)


def _canonical(assignment: Sequence[object]) -> tuple[int, ...]:
    relabel: dict[object, int] = {}
    return tuple(relabel.setdefault(a, len(relabel)) for a in assignment)


Chain = tuple[Partition, ...]


def all_partitions(leaves: LeafSet, nontrivial_only: bool = False) -> list[Partition]:
    """Every set partition in lexicographic order of restricted-growth strings."""

    n = len(leaves)
    result: list[Partition] = []

    def extend(prefix: list[int], top: int) -> None:
        if len(prefix) == n:
            result.append(Partition(leaves, tuple(prefix)))
            return
        for b in range(top + 2):
            prefix.append(b)
            extend(prefix, max(top, b))
            prefix.pop()

    extend([0], 0)
    if nontrivial_only:
        result = [p for p in result if not p.is_trivial()]
    return result


def leq(c: Partition, d: Partition) -> bool:
    """``c <= d``: ``d`` refines ``c``."""
    if c.leaves != d.leaves:
        raise LeafSetMismatch(left=list(c.leaves.labels), right=list(d.leaves.labels))
    coarse_of: dict[int, int] = {}
    for fine, coarse in zip(d.rgs, c.rgs):
        if coarse_of.setdefault(fine, coarse) != coarse:
            return False
    return True


@lru_cache(maxsize=16)
def partition_poset(leaves: LeafSet) -> Poset:
    """P(A): the nontrivial partitions of ``leaves`` under refinement."""

    if len(leaves) < 2:
        raise TooSmall(leaves=list(leaves.labels))
    elements = all_partitions(leaves, nontrivial_only=True)
    up = tuple(
        frozenset(j for j, d in enumerate(elements) if leq(c, d))
        for c in elements
    )
    P = Poset(elements=tuple(elements), up=up)
    logger.debug("Built partition poset", extra={"leaves": len(leaves), "elements": len(P)})
    return P


def is_chain(sigma: Sequence[Partition]) -> bool:
    """Strictly increasing sequence of nontrivial partitions."""
    if not sigma or any(c.is_trivial() for c in sigma):
        return False
    return all(leq(a, b) and a != b for a, b in zip(sigma, sigma[1:]))


def is_elementary(sigma: Sequence[Partition]) -> bool:
    """
    Exactly one block is split at each step and the last partition has a
    single block of size two or more.
    """
    for a, b in zip(sigma, sigma[1:]):
        split = sum(1 for block in a.blocks if block not in set(b.blocks))
        if split != 1:
            return False
    return len(sigma[-1].nonsingleton_blocks()) == 1
