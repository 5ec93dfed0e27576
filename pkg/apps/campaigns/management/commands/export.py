"""
Export a tree, a chain of partitions, a poset or the elementary layerings
of a tree as JSON or DOT.
"""

from apps.campaigns.commands import CampaignCommand, Outcome
from apps.comparison.layerings import chain_to_dot, elementary_layerings, phi
from apps.comparison.serializers import LayeringSerializer
from apps.comparison.theorem import tplus_poset
from apps.core.exceptions import ConfigError, PartcxError
from apps.partitions.partitions import Partition, is_chain, is_elementary, partition_poset
from apps.posets.posets import hasse_diagram, to_dot
from apps.posets.serializers import PosetSummarySerializer
from apps.trees.serializers import TreeSerializer
from apps.trees.trees import enumerate_trees, parse_tree
from apps.trees.trees import to_dot as tree_to_dot

KINDS = ("tree", "chain", "poset", "layerings")
POSETS = ("np", "tplus", "t")


class Command(CampaignCommand):
    help = 'Export a tree, a chain, a poset or the layerings of a tree as JSON or DOT'
    formats = ("json", "dot")

    def add_command_arguments(self, parser):
        parser.add_argument('kind', type=str, help='tree, chain, poset or layerings')
        parser.add_argument('--tree', type=str, help='Tree as its non-root members, e.g. "ab|cde"')
        parser.add_argument('--chain', type=str, help='Partitions separated by ";", e.g. "(abcde)(f);(ab)(cde)(f)"')
        parser.add_argument('--poset', type=str, default='np', help='np, tplus or t')

    def run(self, config, options):
        kind = options['kind']
        if kind not in KINDS:
            raise ConfigError(f"Unknown export {kind!r}; use one of {', '.join(KINDS)}.", kind=kind)
        return getattr(self, f"export_{kind}")(config, options)

    def _tree(self, config, options):
        if not options.get('tree'):
            raise ConfigError("--tree is required for this export.")
        try:
            return parse_tree(config.leaves, options['tree'])
        except PartcxError as exc:
            raise ConfigError(exc.message, tree=options['tree']) from exc

    def export_tree(self, config, options):
        tree = self._tree(config, options)
        return Outcome(passed=True, report=TreeSerializer(tree).data, dot=tree_to_dot(tree))

    def export_chain(self, config, options):
        if not options.get('chain'):
            raise ConfigError("--chain is required for this export.")
        try:
            sigma = tuple(Partition.parse(config.leaves, part) for part in options['chain'].split(";") if part.strip())
        except PartcxError as exc:
            raise ConfigError(exc.message, chain=options['chain']) from exc
        if not is_chain(sigma):
            raise ConfigError("Partitions must be nontrivial and strictly refining.", chain=options['chain'])
        report = {
            "chain": [c.as_lists() for c in sigma],
            "elementary": is_elementary(sigma),
            "tree": TreeSerializer(phi(sigma)).data,
        }
        return Outcome(passed=True, report=report, dot=chain_to_dot(sigma))

    def export_poset(self, config, options):
        which = options['poset']
        if which == "np":
            P = partition_poset(config.leaves)
        elif which == "tplus":
            P = tplus_poset(config.leaves)
        elif which == "t":
            P = enumerate_trees(config.leaves).poset
        else:
            raise ConfigError(f"Unknown poset {which!r}; use one of {', '.join(POSETS)}.", poset=which)
        report = {
            "poset": which,
            "summary": PosetSummarySerializer(P).data,
            "covers": [[str(a), str(b)] for a, b in hasse_diagram(P)],
        }
        return Outcome(passed=True, report=report, dot=to_dot(P, name=which))

    def export_layerings(self, config, options):
        tree = self._tree(config, options)
        layerings = elementary_layerings(tree)
        report = {
            "tree": TreeSerializer(tree).data,
            "layerings": LayeringSerializer(layerings, many=True).data,
        }
        dot = "\n".join(chain_to_dot(layering.chain, name=f"layering{k}") for k, layering in enumerate(layerings))
        return Outcome(passed=True, report=report, dot=dot)
