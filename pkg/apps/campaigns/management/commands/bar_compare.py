"""
Compare the bar construction of an operad with the suspended cofiber of its
tree nerve, over the integers and the rationals.
"""

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.operads.bar import compare_bars
from apps.operads.loader import resolve_operad
from apps.operads.serializers import BarReportSerializer, OperadSummarySerializer
from apps.simplicial.chains import INTEGERS, RATIONALS


class Command(CampaignCommand):
    help = 'Compare bar homology with the tree-side cofiber for comm, assoc or file:PATH'
    bound = "MAX_BAR_LEAVES"

    def add_command_arguments(self, parser):
        parser.add_argument('operad', type=str, help='comm, assoc or file:PATH')

    def run(self, config, options):
        O = resolve_operad(config.operad, config.operad_max_arity)
        report = compare_bars(O, config.leaves, rings=(INTEGERS, RATIONALS))
        rows = []
        for comparison in report.rings:
            for side, H in (("bar", comparison.bar), ("tree", comparison.tree)):
                for g in H.groups:
                    if not g.is_zero():
                        rows.append({
                            "ring": comparison.ring, "side": side, "degree": g.degree,
                            "rank": g.betti, "torsion": ",".join(map(str, g.torsion)) or "-",
                        })
        return Outcome(
            passed=report.passed,
            report={"operad_summary": OperadSummarySerializer(O).data, **BarReportSerializer(report).data},
            rows=rows,
            summary=f"{O.name} on {len(config.leaves)} leaves: {'pass' if report.passed else 'FAIL'}",
        )
