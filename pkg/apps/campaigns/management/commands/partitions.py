"""
Enumerate the poset P(A) of nontrivial partitions.
"""

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.partitions.partitions import partition_poset
from apps.partitions.serializers import PartitionSerializer
from apps.posets.posets import to_dot
from apps.posets.serializers import PosetSummarySerializer


class Command(CampaignCommand):
    help = 'Enumerate the nontrivial partitions of a leaf set under refinement'
    formats = ("json", "text", "dot")

    def run(self, config, options):
        P = partition_poset(config.leaves)
        partitions = PartitionSerializer(P.elements, many=True).data
        rows = [{"partition": p["text"], "blocks": len(p["blocks"])} for p in partitions]
        return Outcome(
            passed=True,
            report={
                "leaves": list(config.leaves.labels),
                "poset": PosetSummarySerializer(P).data,
                "partitions": partitions,
            },
            rows=rows,
            summary=f"{len(P)} nontrivial partitions",
            dot=to_dot(P, name="partitions"),
        )
