"""
Serializers for layerings and theorem reports.
"""

from rest_framework import serializers

from apps.posets.serializers import InitialityReportSerializer
from apps.simplicial.serializers import HomologyResultSerializer
from apps.trees.serializers import TreeSerializer


class LayeringSerializer(serializers.Serializer):
    chain = serializers.SerializerMethodField()
    elementary = serializers.BooleanField()
    length = serializers.IntegerField()
    top = serializers.SerializerMethodField()

    def get_chain(self, obj):
        return [c.as_lists() for c in obj.chain]

    def get_top(self, obj):
        return list(obj.tree.leaves.sort(obj.top)) if obj.top is not None else None


class ConeResultSerializer(serializers.Serializer):
    subset = serializers.SerializerMethodField()
    ok = serializers.BooleanField()
    counterexample = serializers.DictField(allow_null=True)

    def get_subset(self, obj):
        return [sorted(v) for v in obj.subset]


class TreeReportSerializer(serializers.Serializer):
    """
    One item of a theorem campaign. Passing cone checks are kept in the
    listing so the covered subsets are visible.
    """
    key = serializers.CharField()
    tree = TreeSerializer()
    passed = serializers.BooleanField()
    cover_ok = serializers.BooleanField()
    cover_counterexample = serializers.DictField(allow_null=True)
    cone_ok = serializers.BooleanField()
    cones = ConeResultSerializer(many=True)
    homology = HomologyResultSerializer()
    slice_match = serializers.BooleanField()


class TheoremReportSerializer(serializers.Serializer):
    leaves = serializers.SerializerMethodField()
    ring = serializers.CharField()
    passed = serializers.BooleanField()
    vacuous = serializers.BooleanField()
    checked = serializers.SerializerMethodField()
    failures = serializers.SerializerMethodField()
    trees = TreeReportSerializer(many=True)
    initiality = InitialityReportSerializer(allow_null=True)

    def get_leaves(self, obj):
        return list(obj.leaves.labels)

    def get_checked(self, obj):
        return len(obj.trees)

    def get_failures(self, obj):
        return [r.key for r in obj.failures]
