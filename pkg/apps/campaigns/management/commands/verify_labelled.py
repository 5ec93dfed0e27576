"""
Labelled comparison for an operad: initiality of the map from the labelled
partition complex to the category of elements of the tree nerve.
"""

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.operads.loader import resolve_operad
from apps.operads.nerve import verify_labelled_comparison
from apps.operads.serializers import LabelledReportSerializer, OperadSummarySerializer


class Command(CampaignCommand):
    help = 'Verify the labelled comparison for comm, assoc or file:PATH'
    bound = "MAX_LABELLED_LEAVES"

    def add_command_arguments(self, parser):
        parser.add_argument('operad', type=str, help='comm, assoc or file:PATH')

    def run(self, config, options):
        O = resolve_operad(config.operad, config.operad_max_arity)
        report = verify_labelled_comparison(O, config.leaves, jobs=config.jobs, ring=config.ring)
        data = LabelledReportSerializer(report).data
        rows = [
            {"check": "initiality", "value": report.initiality.passed},
            {"check": "slices", "value": report.initiality.checked},
            {"check": "labelled complex", "value": report.complex_homology.describe()},
        ]
        return Outcome(
            passed=report.passed,
            report={"operad_summary": OperadSummarySerializer(O).data, **data},
            rows=rows,
            summary=f"{O.name} on {len(config.leaves)} leaves: {'pass' if report.passed else 'FAIL'}",
        )
