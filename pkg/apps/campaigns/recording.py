"""
Helpers for writing sanitized campaign records.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Iterable, Optional

from django.db import transaction

from apps.core.exceptions import ConfigError

from .models import CampaignItem, CampaignRun

logger = logging.getLogger("partcx.campaigns")

TIMESTAMP_KEYS = {"timestamp", "created_at", "updated_at", "started_at", "finished_at"}


def sanitize_payload(payload: Any) -> Any:
    """
    Reduce a payload to JSON primitives, dropping timestamp keys so stored
    items reproduce byte-identical reports.
    """
    if payload is None or isinstance(payload, (bool, int, float, str)):
        return payload
    if isinstance(payload, dict):
        return {str(key): sanitize_payload(value) for key, value in payload.items() if key not in TIMESTAMP_KEYS}
    if isinstance(payload, (list, tuple)):
        return [sanitize_payload(item) for item in payload]
    if isinstance(payload, (set, frozenset)):
        return sorted((sanitize_payload(item) for item in payload), key=str)
    return str(payload)


def start_run(command: str, parameters: Dict[str, Any]) -> CampaignRun:
    run = CampaignRun.objects.create(command=command, parameters=sanitize_payload(parameters))
    logger.info("Recording campaign run", extra={"run": run.pk, "command": command})
    return run


def resume_run(run_id: int, command: str, parameters: Dict[str, Any]) -> CampaignRun:
    """
    Reopen an earlier run; it must belong to the same command and parameters.
    """
    try:
        run = CampaignRun.objects.get(pk=run_id)
    except CampaignRun.DoesNotExist as exc:
        raise ConfigError(f"No campaign run {run_id}.", run=run_id) from exc
    if run.command != command or run.parameters != sanitize_payload(parameters):
        raise ConfigError(
            "The run to resume was started with another command or parameters.",
            run=run_id, command=run.command,
        )
    run.status = "running"
    run.save(update_fields=["status", "updated_at"])
    return run


def finished_items(run: Optional[CampaignRun]) -> Dict[str, Dict[str, Any]]:
    if run is None:
        return {}
    return {item.key: item.payload for item in run.items.all()}


def record_items(run: CampaignRun, items: Iterable[tuple[str, bool, Dict[str, Any]]]) -> None:
    rows = [
        CampaignItem(run=run, key=key, passed=passed, payload=sanitize_payload(payload))
        for key, passed, payload in items
    ]
    with transaction.atomic():
        CampaignItem.objects.bulk_create(rows)


def finish_run(run: Optional[CampaignRun], passed: bool) -> None:
    if run is None:
        return
    run.status = "finished"
    run.passed = passed
    run.save(update_fields=["status", "passed", "updated_at"])


def fail_run(run: Optional[CampaignRun]) -> None:
    if run is None:
        return
    run.status = "failed"
    run.save(update_fields=["status", "updated_at"])
