"""
Finite reduced set-operads given by tables.

The stored structure is the partial composition ``μ ∘_i ν`` (0-based input
``i``) and the right action of permutations. A permutation ``σ`` is a tuple
with ``σ[j]`` the new position of input ``j``. Arity one holds only the
implicit identity ``"id"``; there are no constants.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from apps.core.exceptions import ArityOverflow, ConfigError, OperadAxiomViolation, OperadFormatError

logger = logging.getLogger("partcx.operads")

IDENTITY = "id"
EXHAUSTIVE_ARITY = 4
SAMPLE_SIZE = 2000

Permutation = tuple[int, ...]


def compose_permutations(tau: Permutation, sigma: Permutation) -> Permutation:
    """``τ ∘ σ``: first move by ``σ``, then by ``τ``."""
    return tuple(tau[s] for s in sigma)


def block_permutation(sigma: Permutation, sizes: Sequence[int]) -> Permutation:
    """
    Move consecutive blocks of inputs as units: block ``j`` has ``sizes[j]``
    inputs and lands in slot ``σ[j]``, keeping its inner order.
    """

    order = sorted(range(len(sigma)), key=lambda j: sigma[j])
    offset_new = {}
    running = 0
    for j in order:
        offset_new[j] = running
        running += sizes[j]
    result = []
    for j, size in enumerate(sizes):
        result.extend(offset_new[j] + t for t in range(size))
    return tuple(result)


def insert_permutation(n: int, i: int, tau: Permutation) -> Permutation:
    """``τ`` acting on the inputs ``i .. i + len(τ) - 1`` of an arity-``n`` operation."""
    k = len(tau)
    return tuple(range(i)) + tuple(i + t for t in tau) + tuple(range(i + k, n))


def sort_permutation(inputs: Sequence, canonical: Sequence) -> Permutation:
    """The permutation moving ``inputs`` into the order of ``canonical``."""
    position = {x: j for j, x in enumerate(canonical)}
    return tuple(position[x] for x in inputs)


@dataclass(frozen=True, eq=False)
class FiniteOperad:
    name: str
    max_arity: int
    operations: Mapping[int, tuple[str, ...]]
    compositions: Mapping[tuple[str, int, str], str]
    actions: Mapping[tuple[str, Permutation], str]

    def __post_init__(self):
        arity = {IDENTITY: 1}
        for n, ops in self.operations.items():
            for op in ops:
                if op in arity:
                    raise OperadFormatError("Operation names must be unique.", operation=op)
                arity[op] = n
        object.__setattr__(self, "_arity", arity)

    def arity(self, op: str) -> int:
        try:
            return self._arity[op]
        except KeyError as exc:
            raise OperadFormatError("Unknown operation.", operation=op) from exc

    def ops(self, n: int) -> tuple[str, ...]:
        if n == 1:
            return (IDENTITY,)
        if n > self.max_arity:
            raise ArityOverflow(arity=n, max_arity=self.max_arity, operad=self.name)
        return self.operations.get(n, ())

    def compose_at(self, op: str, i: int, other: str) -> str:
        if other == IDENTITY:
            return op
        if op == IDENTITY:
            return other
        n, k = self.arity(op), self.arity(other)
        if not 0 <= i < n:
            raise OperadFormatError("Input position out of range.", operation=op, position=i)
        if n + k - 1 > self.max_arity:
            raise ArityOverflow(arity=n + k - 1, max_arity=self.max_arity, operad=self.name)
        try:
            return self.compositions[(op, i, other)]
        except KeyError as exc:
            raise OperadFormatError("Composition table is incomplete.", operation=op, position=i, other=other) from exc

    def act(self, op: str, sigma: Sequence[int]) -> str:
        sigma = tuple(sigma)
        if op == IDENTITY or sigma == tuple(range(len(sigma))):
            return op
        try:
            return self.actions[(op, sigma)]
        except KeyError as exc:
            raise OperadFormatError("Action table is incomplete.", operation=op, permutation=list(sigma)) from exc

    def compose(self, op: str, children: Sequence[str]) -> str:
        """Full composition: ``children[j]`` plugged into input ``j``, last input first."""
        if len(children) != self.arity(op):
            raise OperadFormatError("Wrong number of inputs.", operation=op, inputs=len(children))
        result = op
        for j in reversed(range(len(children))):
            result = self.compose_at(result, j, children[j])
        return result

    def size(self) -> dict[int, int]:
        return {n: len(ops) for n, ops in sorted(self.operations.items())}

    # validation ---------------------------------------------------------------

    def _sample(self, cases: Iterator[tuple], exhaustive: bool) -> Iterable[tuple]:
        if exhaustive:
            return cases
        pool = list(cases)
        if len(pool) <= SAMPLE_SIZE:
            return pool
        return random.Random(0).sample(pool, SAMPLE_SIZE)

    def _fail(self, law: str, **context) -> None:
        logger.warning("Operad axiom violated", extra={"operad": self.name, "law": law})
        raise OperadAxiomViolation(f"{law} fails.", law=law, operad=self.name, **context)

    def validate(self) -> None:
        """
        Check the action laws, both equivariance laws and sequential and
        parallel associativity on every composite within the arity bound.
        Above arity four the checks run on a seeded sample.
        """

        exhaustive = self.max_arity <= EXHAUSTIVE_ARITY
        all_ops = [op for n in sorted(self.operations) for op in self.operations[n]]

        for op in all_ops:
            n = self.arity(op)
            for sigma in permutations(range(n)):
                if self.arity(self.act(op, sigma)) != n:
                    self._fail("action preserves arity", operation=op, permutation=list(sigma))

        group_cases = (
            (op, sigma, tau)
            for op in all_ops
            for sigma in permutations(range(self.arity(op)))
            for tau in permutations(range(self.arity(op)))
        )
        for op, sigma, tau in self._sample(group_cases, exhaustive):
            if self.act(self.act(op, sigma), tau) != self.act(op, compose_permutations(tau, sigma)):
                self._fail("action group law", operation=op, sigma=list(sigma), tau=list(tau))

        pairs = [
            (mu, i, nu)
            for mu in all_ops
            for nu in all_ops
            if self.arity(mu) + self.arity(nu) - 1 <= self.max_arity
            for i in range(self.arity(mu))
        ]
        for mu, i, nu in pairs:
            if self.arity(self.compose_at(mu, i, nu)) != self.arity(mu) + self.arity(nu) - 1:
                self._fail("composition arity", operation=mu, position=i, other=nu)

        left_cases = (
            (mu, i, nu, sigma) for mu, i, nu in pairs for sigma in permutations(range(self.arity(mu)))
        )
        for mu, i, nu, sigma in self._sample(left_cases, exhaustive):
            n, k = self.arity(mu), self.arity(nu)
            sizes = [k if j == i else 1 for j in range(n)]
            lhs = self.compose_at(self.act(mu, sigma), sigma[i], nu)
            rhs = self.act(self.compose_at(mu, i, nu), block_permutation(sigma, sizes))
            if lhs != rhs:
                self._fail("equivariance in the outer operation", operation=mu, position=i, other=nu,
                           permutation=list(sigma))

        right_cases = (
            (mu, i, nu, tau) for mu, i, nu in pairs for tau in permutations(range(self.arity(nu)))
        )
        for mu, i, nu, tau in self._sample(right_cases, exhaustive):
            n, k = self.arity(mu), self.arity(nu)
            lhs = self.compose_at(mu, i, self.act(nu, tau))
            rhs = self.act(self.compose_at(mu, i, nu), insert_permutation(n + k - 1, i, tau))
            if lhs != rhs:
                self._fail("equivariance in the inner operation", operation=mu, position=i, other=nu,
                           permutation=list(tau))

        triples = (
            (lam, mu, nu)
            for lam, mu, nu in product(all_ops, repeat=3)
            if self.arity(lam) + self.arity(mu) + self.arity(nu) - 2 <= self.max_arity
        )
        for lam, mu, nu in self._sample(triples, exhaustive):
            a, b, c = self.arity(lam), self.arity(mu), self.arity(nu)
            for i in range(a):
                for j in range(b):
                    lhs = self.compose_at(self.compose_at(lam, i, mu), i + j, nu)
                    rhs = self.compose_at(lam, i, self.compose_at(mu, j, nu))
                    if lhs != rhs:
                        self._fail("sequential associativity", operations=[lam, mu, nu], positions=[i, j])
            for i in range(a):
                for j in range(i + 1, a):
                    lhs = self.compose_at(self.compose_at(lam, j, mu), i, nu)
                    rhs = self.compose_at(self.compose_at(lam, i, nu), j + c - 1, mu)
                    if lhs != rhs:
                        self._fail("parallel associativity", operations=[lam, mu, nu], positions=[i, j])

        logger.debug("Validated operad", extra={"operad": self.name, "sizes": self.size(), "exhaustive": exhaustive})


def _check_arity(name: str, max_arity: int) -> None:
    if max_arity < 2:
        raise ConfigError("Operads need operations of arity two.", operad=name, max_arity=max_arity)


@lru_cache(maxsize=None)
def comm(max_arity: int) -> FiniteOperad:
    """One operation per arity, fixed by every permutation. Validated once per bound."""

    _check_arity("comm", max_arity)
    operations = {n: (f"m{n}",) for n in range(2, max_arity + 1)}
    compositions = {
        (f"m{n}", i, f"m{k}"): f"m{n + k - 1}"
        for n in range(2, max_arity + 1)
        for k in range(2, max_arity + 2 - n)
        for i in range(n)
    }
    actions = {
        (f"m{n}", sigma): f"m{n}"
        for n in range(2, max_arity + 1)
        for sigma in permutations(range(n))
    }
    O = FiniteOperad("comm", max_arity, operations, compositions, actions)
    O.validate()
    return O


def _word(letters: Iterable[int]) -> str:
    return "".join(str(x) for x in letters)


@lru_cache(maxsize=None)
def assoc(max_arity: int) -> FiniteOperad:
    """
    Arity-n operations are the n! orderings of the inputs, written as words:
    ``"102"`` multiplies input 1, then input 0, then input 2.
    """

    _check_arity("assoc", max_arity)
    if max_arity > 9:
        raise ConfigError("Word encoding supports arities up to nine.", operad="assoc", max_arity=max_arity)
    operations = {n: tuple(_word(w) for w in permutations(range(n))) for n in range(2, max_arity + 1)}

    compositions = {}
    for n in range(2, max_arity + 1):
        for k in range(2, max_arity + 2 - n):
            for mu in operations[n]:
                for nu in operations[k]:
                    for i in range(n):
                        letters = []
                        for ch in mu:
                            a = int(ch)
                            if a < i:
                                letters.append(a)
                            elif a == i:
                                letters.extend(i + int(t) for t in nu)
                            else:
                                letters.append(a + k - 1)
                        compositions[(mu, i, nu)] = _word(letters)

    actions = {
        (mu, sigma): _word(sigma[int(ch)] for ch in mu)
        for n in range(2, max_arity + 1)
        for mu in operations[n]
        for sigma in permutations(range(n))
    }
    O = FiniteOperad("assoc", max_arity, operations, compositions, actions)
    O.validate()
    return O


BUILTINS = {"comm": comm, "assoc": assoc}
