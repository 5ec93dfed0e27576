"""
Per-tree verification campaign over T⁺(A): cover equality, cone
isomorphisms, acyclicity of L(T) and agreement with the slice of φ.
"""

from django.conf import settings

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.campaigns.runner import celery_dispatch, local_dispatch, run_campaign
from apps.comparison.theorem import theorem_units, verify_phi
from apps.core.exceptions import ConfigError, PartcxError
from apps.posets.serializers import InitialityReportSerializer
from apps.trees.trees import parse_tree


class Command(CampaignCommand):
    help = 'Verify the layering complexes of every tree in T⁺(A)'
    bound = "MAX_THEOREM_LEAVES"
    resumable = True

    def add_command_arguments(self, parser):
        parser.add_argument('--tree', type=str, help='Check a single tree, e.g. "ab|cde" (root implied)')
        parser.add_argument('--initiality', action='store_true', help='Also check every slice of φ')

    def run(self, config, options):
        leaves = config.leaves
        tree = None
        if options.get('tree'):
            try:
                tree = parse_tree(leaves, options['tree'])
            except PartcxError as exc:
                raise ConfigError(exc.message, tree=options['tree']) from exc

        report = {
            "leaves": list(leaves.labels),
            "ring": config.ring,
            "vacuous": False,
            "trees": [],
            "failures": [],
            "checked": 0,
            "initiality": None,
        }
        if len(leaves) == 2 and tree is None:
            report.update(vacuous=True, passed=True)
            return Outcome(passed=True, report=report, summary="vacuous: T⁺(A) is empty for two leaves")

        if settings.PARTCX["CAMPAIGN_BACKEND"] == "celery":
            dispatch = celery_dispatch
        else:
            dispatch = local_dispatch(config.jobs)
        units = theorem_units(leaves, config.ring, config.max_cone_subset, tree)
        result = run_campaign(self.command_name, units, config, dispatch)

        passed = result.passed
        if options.get('initiality'):
            phi_report = verify_phi(leaves, jobs=config.jobs, ring=config.ring)
            report["initiality"] = InitialityReportSerializer(phi_report).data
            passed = passed and phi_report.passed

        report.update(
            trees=list(result.items),
            failures=list(result.failures),
            checked=len(result.items),
            passed=passed,
        )
        rows = [
            {
                "tree": item["key"],
                "passed": item["passed"],
                "cover": item["cover_ok"],
                "cones": len(item["cones"]),
                "homology": item["homology"]["summary"],
                "slice": item["slice_match"],
            }
            for item in result.items
        ]
        summary = f"{len(result.items)} trees, {len(result.failures)} failing"
        if result.run_id is not None:
            summary += f" (run {result.run_id}, {result.reused} reused)"
        return Outcome(passed=passed, report=report, rows=rows, summary=summary)
