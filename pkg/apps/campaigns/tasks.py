"""
Celery tasks for distributed theorem campaigns.
"""

import logging

from celery import shared_task

from apps.comparison.serializers import TreeReportSerializer
from apps.comparison.theorem import verify_tree
from apps.trees.serializers import TreeSerializer

from .recording import sanitize_payload

logger = logging.getLogger("partcx.campaigns")


@shared_task
def verify_tree_task(payload):
    """
    Verify one tree from its JSON payload and return ``[key, passed, report]``.
    """
    serializer = TreeSerializer(data=payload)
    serializer.is_valid(raise_exception=True)
    tree = serializer.save()
    report = verify_tree(tree, ring=payload.get("ring", "z"), max_cone_subset=payload.get("max_cone_subset", 0))
    logger.debug("Verified tree task", extra={"tree": report.key, "passed": report.passed})
    return [report.key, report.passed, sanitize_payload(TreeReportSerializer(report).data)]
