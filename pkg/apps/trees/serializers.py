"""
Serializers for trees and tree posets.
"""

from rest_framework import serializers

from apps.core.exceptions import PartcxError
from apps.partitions.partitions import LeafSet

from .trees import leaf_vertices, validate


class TreeSerializer(serializers.Serializer):
    """
    A tree as its leaf labels and the sorted list of its sorted vertices,
    root first. Reading data back validates the family.
    """

    leaves = serializers.ListField(child=serializers.CharField(), min_length=1)
    family = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))

    def to_representation(self, instance):
        return {
            "leaves": list(instance.leaves.labels),
            "family": instance.as_lists(),
            "text": str(instance),
        }

    def validate(self, attrs):
        try:
            attrs["tree"] = validate(attrs["family"], LeafSet(tuple(attrs["leaves"])))
        except PartcxError as exc:
            raise serializers.ValidationError({"family": exc.message}, code=exc.code) from exc
        return attrs

    def create(self, validated_data):
        return validated_data["tree"]


class TreeListingSerializer(serializers.Serializer):
    tree = serializers.SerializerMethodField()
    vertices = serializers.SerializerMethodField()
    leaf_vertices = serializers.SerializerMethodField()

    def get_tree(self, obj):
        return obj.as_lists()

    def get_vertices(self, obj):
        return len(obj.family)

    def get_leaf_vertices(self, obj):
        return [list(obj.leaves.sort(v)) for v in leaf_vertices(obj)]
