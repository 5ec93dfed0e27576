"""
Serializers for partitions and chains of partitions.
"""

from rest_framework import serializers

from apps.core.exceptions import PartcxError

from .partitions import LeafSet, Partition


class PartitionField(serializers.Field):
    """
    A partition as its sorted block lists, e.g. ``[["a", "b"], ["c"]]``.

    Deserializing needs the leaf set in the serializer context.
    """

    default_error_messages = {
        "not_a_list": "Expected a list of blocks.",
        "missing_leaves": "A leaf set is required to read partitions.",
    }

    def to_representation(self, value):
        return value.as_lists()

    def to_internal_value(self, data):
        leaves = self.context.get("leaves")
        if not isinstance(leaves, LeafSet):
            self.fail("missing_leaves")
        if not isinstance(data, list) or not all(isinstance(block, list) for block in data):
            self.fail("not_a_list")
        try:
            return Partition.from_blocks(leaves, [[str(label) for label in block] for block in data])
        except PartcxError as exc:
            raise serializers.ValidationError(exc.message, code=exc.code) from exc


class PartitionSerializer(serializers.Serializer):
    blocks = serializers.SerializerMethodField()
    size = serializers.IntegerField()
    text = serializers.SerializerMethodField()

    def get_blocks(self, obj):
        return obj.as_lists()

    def get_text(self, obj):
        return str(obj)


class ChainSerializer(serializers.Serializer):
    chain = serializers.ListField(child=PartitionField())
