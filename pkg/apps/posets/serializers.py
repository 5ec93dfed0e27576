"""
Serializers for posets and initiality reports.
"""

from rest_framework import serializers

from apps.simplicial.serializers import HomologyResultSerializer


class PosetSummarySerializer(serializers.Serializer):
    size = serializers.SerializerMethodField()
    minimal = serializers.SerializerMethodField()
    maximal = serializers.SerializerMethodField()
    covers = serializers.SerializerMethodField()

    def get_size(self, obj):
        return len(obj)

    def get_minimal(self, obj):
        return len(obj.minimal())

    def get_maximal(self, obj):
        return len(obj.maximal())

    def get_covers(self, obj):
        return len(obj.cover_relations())


class SliceResultSerializer(serializers.Serializer):
    element = serializers.SerializerMethodField()
    size = serializers.IntegerField()
    passed = serializers.BooleanField()
    reason = serializers.CharField(allow_blank=True)
    homology = HomologyResultSerializer(allow_null=True)

    def get_element(self, obj):
        formatter = self.context.get("format_element", str)
        return formatter(obj.element)


class InitialityReportSerializer(serializers.Serializer):
    """
    Serializer for InitialityReport.

    Passing slices are only counted; failing ones are listed in full.
    """
    passed = serializers.BooleanField()
    model = serializers.CharField()
    checked = serializers.IntegerField()
    failures = SliceResultSerializer(many=True)
    consequence = serializers.SerializerMethodField()

    def get_consequence(self, obj):
        if obj.consequence is None:
            return None
        return {
            "source": HomologyResultSerializer(obj.consequence["source"]).data,
            "target": HomologyResultSerializer(obj.consequence["target"]).data,
            "match": obj.consequence["match"],
        }
