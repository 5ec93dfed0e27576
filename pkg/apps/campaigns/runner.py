"""
Campaign runner: dispatches keyed work units in batches, records finished
items and merges results in key order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from apps.comparison.serializers import TreeReportSerializer
from apps.comparison.theorem import TreeReport, _verify_unit
from apps.core.parallel import ordered_map
from apps.core.runconfig import RunConfig

from .recording import fail_run, finish_run, finished_items, record_items, resume_run, sanitize_payload, start_run

logger = logging.getLogger("partcx.campaigns")

BATCH_PER_JOB = 4

Item = tuple[str, bool, dict[str, Any]]
Dispatch = Callable[[list[Any]], list[Item]]


@dataclass(frozen=True)
class CampaignResult:
    items: tuple[dict[str, Any], ...]
    passed: bool
    failures: tuple[str, ...] = ()
    run_id: int | None = None
    reused: int = 0


def theorem_item(report: TreeReport) -> Item:
    return report.key, report.passed, sanitize_payload(TreeReportSerializer(report).data)


def tree_task_payload(unit: tuple) -> dict[str, Any]:
    tree, ring, max_cone_subset = unit
    return {
        "leaves": list(tree.leaves.labels),
        "family": tree.as_lists(),
        "ring": ring,
        "max_cone_subset": max_cone_subset,
    }


def local_dispatch(jobs: int) -> Dispatch:
    """
    Verify trees in a local process pool. Workers return plain reports; they
    are serialized here, in the parent.
    """
    def dispatch(units: list[Any]) -> list[Item]:
        return [theorem_item(report) for report in ordered_map(_verify_unit, units, jobs=jobs)]
    return dispatch


def celery_dispatch(units: list[Any]) -> list[Item]:
    """Send a batch of tree units to the workers as one Celery group."""
    from celery import group

    from .tasks import verify_tree_task

    job = group(verify_tree_task.s(tree_task_payload(unit)) for unit in units)
    result = job.apply_async()
    return [tuple(child.get()) for child in result.results]


def _open_run(command: str, config: RunConfig):
    if config.resume is not None:
        return resume_run(config.resume, command, config.parameters)
    if config.record:
        return start_run(command, config.parameters)
    return None


def run_campaign(
    command: str,
    units: Sequence[tuple[str, Any]],
    config: RunConfig,
    dispatch: Dispatch,
) -> CampaignResult:
    """
    Compute every ``(key, unit)`` not finished in a resumed run.

    Items are recorded batch by batch, so an interrupted run keeps what it
    finished. The merged result is ordered by key and does not depend on
    batching, workers or resuming.
    """

    run = _open_run(command, config)
    done = finished_items(run)
    pending = [(key, unit) for key, unit in units if key not in done]
    logger.info(
        "Starting campaign",
        extra={"command": command, "units": len(units), "pending": len(pending),
               "run": run.pk if run else None},
    )

    payloads: dict[str, dict[str, Any]] = dict(done)
    batch_size = max(1, config.jobs) * BATCH_PER_JOB
    try:
        for start in range(0, len(pending), batch_size):
            batch = pending[start:start + batch_size]
            results = dispatch([unit for _, unit in batch])
            if run is not None:
                record_items(run, results)
            for key, passed, payload in results:
                payloads[key] = payload
                if not passed:
                    logger.warning("Campaign item failed", extra={"command": command, "key": key})
    except Exception:
        fail_run(run)
        raise

    items = tuple(payloads[key] for key, _ in sorted(units, key=lambda unit: unit[0]))
    failures = tuple(item["key"] for item in items if not item["passed"])
    passed = not failures
    finish_run(run, passed)
    logger.info(
        "Finished campaign",
        extra={"command": command, "items": len(items), "failures": len(failures), "passed": passed},
    )
    return CampaignResult(
        items=items,
        passed=passed,
        failures=failures,
        run_id=run.pk if run else None,
        reused=len(done),
    )
