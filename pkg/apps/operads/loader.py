"""
Operad lookup by name and the JSON table format for user-supplied operads.

A table file looks like::

    {
      "name": "two-products",
      "operations": {"2": ["x", "y"], "3": ["p", "q"]},
      "actions": [["x", [1, 0], "y"], ["y", [1, 0], "x"]],
      "compositions": [["x", 0, "x", "p"], ...]
    }

``actions`` lists generators only; the full action is their closure under
the group law. Operations without listed actions are fixed by every
permutation. ``compositions`` must cover every ``(op, i, op2)`` whose
arity stays within the largest listed arity.
"""

from __future__ import annotations

import json
import logging
from itertools import permutations
from pathlib import Path
from typing import Any

from apps.core.exceptions import ConfigError, OperadAxiomViolation, OperadFormatError

from .operads import BUILTINS, FiniteOperad, compose_permutations
from .serializers import OperadTableSerializer

logger = logging.getLogger("partcx.operads")

FILE_PREFIX = "file:"


def resolve_operad(spec: str, max_arity: int) -> FiniteOperad:
    """``comm``, ``assoc`` or ``file:PATH``."""
    if spec.startswith(FILE_PREFIX):
        return load_operad(spec[len(FILE_PREFIX):])
    try:
        factory = BUILTINS[spec]
    except KeyError as exc:
        raise ConfigError(
            f"Unknown operad {spec!r}; use one of {', '.join(sorted(BUILTINS))} or file:PATH.", operad=spec,
        ) from exc
    return factory(max_arity)


def load_operad(path: str | Path) -> FiniteOperad:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise OperadFormatError("Cannot read operad file.", path=str(path)) from exc
    except json.JSONDecodeError as exc:
        raise OperadFormatError("Operad file is not valid JSON.", path=str(path), line=exc.lineno) from exc
    O = parse_operad(data, default_name=path.stem)
    O.validate()
    logger.info("Loaded operad table", extra={"operad": O.name, "path": str(path), "sizes": O.size()})
    return O


def parse_operad(data: Any, default_name: str = "custom") -> FiniteOperad:
    serializer = OperadTableSerializer(data=data)
    if not serializer.is_valid():
        raise OperadFormatError("Operad table is malformed.", **serializer.errors)
    table = serializer.validated_data

    operations: dict[int, tuple[str, ...]] = table["operations"]
    arity = {op: n for n, ops in operations.items() for op in ops}

    generators: dict[str, list[tuple[tuple[int, ...], str]]] = {}
    for op, sigma, result in table["actions"]:
        generators.setdefault(op, []).append((sigma, result))

    actions = {}
    for op, n in arity.items():
        if op not in generators:
            actions.update({(op, sigma): op for sigma in permutations(range(n))})
            continue
        actions.update(_close_action(op, n, generators))

    return FiniteOperad(
        name=table.get("name", default_name),
        max_arity=max(operations),
        operations=operations,
        compositions=table["compositions"],
        actions=actions,
    )


def _close_action(op: str, n: int, generators: dict[str, list[tuple[tuple[int, ...], str]]]) -> dict:
    """Orbit of ``op`` under the listed generators, as a full action table for ``op``."""

    identity = tuple(range(n))
    known = {identity: op}
    frontier = [identity]
    while frontier:
        rho = frontier.pop()
        current = known[rho]
        for sigma, result in generators.get(current, []):
            target = compose_permutations(sigma, rho)
            if target in known:
                if known[target] != result:
                    raise OperadAxiomViolation(
                        "Listed actions contradict the group law.", law="action group law", operation=op,
                        permutation=list(target),
                    )
                continue
            known[target] = result
            frontier.append(target)
    if len(known) != len(list(permutations(range(n)))):
        raise OperadFormatError("Listed actions do not generate the symmetric group.", operation=op, reached=len(known))
    return {(op, rho): result for rho, result in known.items()}
