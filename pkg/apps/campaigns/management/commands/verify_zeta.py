"""
Homotopy initiality of the last-vertex map on P(A).
"""

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.comparison.theorem import verify_zeta
from apps.partitions.partitions import partition_poset
from apps.posets.serializers import InitialityReportSerializer


class Command(CampaignCommand):
    help = 'Check that the last-vertex map from chains of P(A) to P(A) is homotopy initial'
    bound = "MAX_THEOREM_LEAVES"

    def run(self, config, options):
        report = verify_zeta(partition_poset(config.leaves), jobs=config.jobs, ring=config.ring)
        data = InitialityReportSerializer(report).data
        rows = [{"slice": str(s.element), "size": s.size, "reason": s.reason} for s in report.failures]
        return Outcome(
            passed=report.passed,
            report={"leaves": list(config.leaves.labels), "ring": config.ring, **data},
            rows=rows,
            summary=f"{report.checked} slices checked, {len(report.failures)} failing",
        )
