"""
Enumerate the tree poset T(A), or T⁺(A) with ``--plus``.
"""

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.posets.posets import to_dot
from apps.posets.serializers import PosetSummarySerializer
from apps.trees.serializers import TreeListingSerializer
from apps.trees.trees import enumerate_trees


class Command(CampaignCommand):
    help = 'Enumerate the trees on a leaf set ordered by inclusion of families'
    bound = "MAX_TREE_LEAVES"
    formats = ("json", "text", "dot")

    def add_command_arguments(self, parser):
        parser.add_argument('--plus', action='store_true', help='Leave out the corolla (T⁺ instead of T)')

    def run(self, config, options):
        trees = enumerate_trees(config.leaves, include_corolla=not options['plus'])
        listing = TreeListingSerializer(trees.trees, many=True).data
        rows = [
            {"tree": str(t), "vertices": item["vertices"], "leaf vertices": len(item["leaf_vertices"])}
            for t, item in zip(trees.trees, listing)
        ]
        return Outcome(
            passed=True,
            report={
                "leaves": list(config.leaves.labels),
                "plus": options['plus'],
                "poset": PosetSummarySerializer(trees.poset).data,
                "trees": listing,
            },
            rows=rows,
            summary=f"{len(trees)} trees",
            dot=to_dot(trees.poset, name="trees"),
        )
