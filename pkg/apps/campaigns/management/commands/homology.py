"""
Reduced homology of the partition complex NP(A), of T⁺(A) or of T(A),
checked against the expected answer.
"""

from math import factorial

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.comparison.theorem import tplus_poset
from apps.core.exceptions import ConfigError
from apps.partitions.partitions import partition_poset
from apps.posets.initiality import order_homology
from apps.simplicial.serializers import HomologyResultSerializer
from apps.trees.trees import enumerate_trees

MODELS = ("np", "tplus", "t")


def expected_homology(model, n):
    """
    NP(A) and T⁺(A) are wedges of (n-1)! spheres of dimension n-3; with two
    leaves both are empty. T(A) has the corolla as least element.
    """
    if model == "t":
        return {}, False
    if n == 2:
        return {}, True
    return {n - 3: (factorial(n - 1), ())}, False


class Command(CampaignCommand):
    help = 'Compute the reduced homology of NP(A), T⁺(A) or T(A)'

    def add_command_arguments(self, parser):
        parser.add_argument('model', type=str, help='np, tplus or t')

    def run(self, config, options):
        model = options['model']
        if model not in MODELS:
            raise ConfigError(f"Unknown model {model!r}; use one of {', '.join(MODELS)}.", model=model)
        if model == "np":
            P = partition_poset(config.leaves)
        elif model == "tplus":
            P = tplus_poset(config.leaves)
        else:
            P = enumerate_trees(config.leaves).poset

        H = order_homology(P, config.ring)
        expected, empty = expected_homology(model, len(config.leaves))
        passed = H.empty == empty and H.nonzero() == expected
        rows = [
            {"degree": g.degree, "rank": g.betti, "torsion": ",".join(map(str, g.torsion)) or "-"}
            for g in H.groups
        ]
        return Outcome(
            passed=passed,
            report={
                "model": model,
                "leaves": list(config.leaves.labels),
                "elements": len(P),
                "homology": HomologyResultSerializer(H).data,
                "expected": {str(d): rank for d, (rank, _) in expected.items()},
                "passed": passed,
            },
            rows=rows,
            summary=H.describe(),
        )
