"""
Run configuration for campaign commands: command options layered over the
``PARTCX`` settings defaults.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from django.conf import settings

from apps.core.exceptions import ConfigError, PartcxError
from apps.partitions.partitions import LeafSet
from apps.simplicial.chains import RINGS

FORMATS = ("json", "text", "dot")
BACKENDS = ("local", "celery")


@dataclass(frozen=True)
class RunConfig:
    leaves: LeafSet
    ring: str = "z"
    jobs: int = 1
    output_format: str = "json"
    max_cone_subset: int = 0
    operad: str = "comm"
    operad_max_arity: int = 4
    out: str | None = None
    record: bool = False
    resume: int | None = None
    backend: str = "local"

    @property
    def parameters(self) -> dict[str, Any]:
        """What identifies a run for resuming; output options are left out."""
        return {
            "leaves": list(self.leaves.labels),
            "ring": self.ring,
            "max_cone_subset": self.max_cone_subset,
            "operad": self.operad,
            "operad_max_arity": self.operad_max_arity,
        }

    @classmethod
    def from_options(cls, options: Mapping[str, Any], bound: str = "MAX_LEAVES") -> "RunConfig":
        """
        Build and check a configuration. ``bound`` names the ``PARTCX`` key
        limiting the number of leaves for the calling command.
        """

        defaults = settings.PARTCX
        leaves = _leaves(options.get("labels"), options.get("n"))
        limit = defaults[bound]
        if len(leaves) > limit:
            raise ConfigError(
                f"At most {limit} leaves are allowed here; raise PARTCX_{bound} to go further.",
                leaves=len(leaves), bound=bound,
            )

        ring = options.get("ring") or defaults["RING"]
        if ring not in RINGS:
            raise ConfigError(f"Unknown ring {ring!r}; use one of {', '.join(RINGS)}.", ring=ring)
        jobs = options.get("jobs")
        if jobs is None:
            jobs = defaults["JOBS"]
        if jobs < 1:
            raise ConfigError("--jobs must be positive.", jobs=jobs)
        output_format = options.get("format") or "json"
        if output_format not in FORMATS:
            raise ConfigError(f"Unknown format {output_format!r}.", format=output_format)
        max_cone_subset = options.get("max_cone_subset")
        if max_cone_subset is None:
            max_cone_subset = defaults["MAX_CONE_SUBSET"]
        if max_cone_subset < 0:
            raise ConfigError("--max-cone-subset must be zero (no cap) or positive.", max_cone_subset=max_cone_subset)
        backend = defaults["CAMPAIGN_BACKEND"]
        if backend not in BACKENDS:
            raise ConfigError(f"Unknown campaign backend {backend!r}.", backend=backend)

        return cls(
            leaves=leaves,
            ring=ring,
            jobs=jobs,
            output_format=output_format,
            max_cone_subset=max_cone_subset,
            operad=options.get("operad") or "comm",
            operad_max_arity=max(defaults["OPERAD_MAX_ARITY"], len(leaves)),
            out=options.get("out"),
            record=bool(options.get("record")),
            resume=options.get("resume"),
            backend=backend,
        )


def _leaves(labels: str | None, n: int | None) -> LeafSet:
    if labels and n is not None:
        raise ConfigError("Pass either --n or --labels, not both.")
    if labels:
        try:
            leaves = LeafSet.parse(labels)
        except PartcxError as exc:
            raise ConfigError(exc.message, labels=labels) from exc
    elif n is not None:
        if n < 1:
            raise ConfigError("--n must be positive.", n=n)
        leaves = LeafSet.of_size(n)
    else:
        raise ConfigError("Pass --n or --labels to choose the leaf set.")
    if len(leaves) < 2:
        raise ConfigError("At least two leaves are needed.", leaves=list(leaves.labels))
    return leaves
