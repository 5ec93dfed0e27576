"""
Serializers for homology results and simplicial sets.
"""

from rest_framework import serializers


class DegreeHomologySerializer(serializers.Serializer):
    degree = serializers.IntegerField()
    betti = serializers.IntegerField(min_value=0)
    torsion = serializers.ListField(child=serializers.IntegerField(min_value=2))


class HomologyResultSerializer(serializers.Serializer):
    """
    Serializer for HomologyResult.

    The empty complex is reported as such instead of as numbers.
    """
    ring = serializers.CharField()
    reduced = serializers.BooleanField()
    empty = serializers.BooleanField()
    groups = DegreeHomologySerializer(many=True)
    summary = serializers.SerializerMethodField()

    def get_summary(self, obj):
        return obj.describe()
