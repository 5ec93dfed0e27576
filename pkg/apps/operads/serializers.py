"""
Serializers for operads, labelled comparisons and bar comparisons.
"""

from rest_framework import serializers

from apps.posets.serializers import InitialityReportSerializer
from apps.simplicial.serializers import HomologyResultSerializer


class OperadSummarySerializer(serializers.Serializer):
    name = serializers.CharField()
    max_arity = serializers.IntegerField()
    sizes = serializers.SerializerMethodField()

    def get_sizes(self, obj):
        return {str(n): size for n, size in obj.size().items()}


class LabelledReportSerializer(serializers.Serializer):
    operad = serializers.CharField()
    leaves = serializers.SerializerMethodField()
    passed = serializers.BooleanField()
    f_vector = serializers.ListField(child=serializers.IntegerField())
    complex_homology = HomologyResultSerializer()
    initiality = InitialityReportSerializer()

    def get_leaves(self, obj):
        return list(obj.leaves.labels)


class RingComparisonSerializer(serializers.Serializer):
    ring = serializers.CharField()
    match = serializers.BooleanField()
    bar = HomologyResultSerializer()
    tree = HomologyResultSerializer()


class BarReportSerializer(serializers.Serializer):
    operad = serializers.CharField()
    leaves = serializers.SerializerMethodField()
    passed = serializers.BooleanField()
    rings = RingComparisonSerializer(many=True)

    def get_leaves(self, obj):
        return list(obj.leaves.labels)


class OperadTableSerializer(serializers.Serializer):
    """
    Reads a JSON operad table. Validated data carries integer arities,
    ``(op, permutation, result)`` action generators and a composition
    table keyed by ``(op, position, op2)``.
    """

    name = serializers.CharField(required=False)
    operations = serializers.DictField(
        child=serializers.ListField(child=serializers.CharField(), allow_empty=False),
        allow_empty=False,
    )
    actions = serializers.ListField(
        child=serializers.ListField(min_length=3, max_length=3), required=False, default=list,
    )
    compositions = serializers.ListField(
        child=serializers.ListField(min_length=4, max_length=4), required=False, default=list,
    )

    def validate_operations(self, value):
        operations = {}
        for key, ops in value.items():
            try:
                n = int(key)
            except ValueError as exc:
                raise serializers.ValidationError(f"Arity section {key!r} is not an integer.") from exc
            if n < 2:
                raise serializers.ValidationError("Arity sections start at two.")
            operations[n] = tuple(ops)
        names = [op for ops in operations.values() for op in ops]
        if len(set(names)) != len(names):
            raise serializers.ValidationError("Operation names must be unique.")
        return operations

    def validate(self, attrs):
        arity = {op: n for n, ops in attrs["operations"].items() for op in ops}

        actions = []
        for op, raw, result in attrs["actions"]:
            if not _known(arity, op, result):
                raise serializers.ValidationError({"actions": f"Action on {op!r} names an unknown operation."})
            if not _is_permutation(raw, arity[op]):
                raise serializers.ValidationError(
                    {"actions": f"Permutation {raw!r} is not an index array of arity {arity[op]}."}
                )
            actions.append((op, tuple(raw), result))

        compositions = {}
        for op, i, other, result in attrs["compositions"]:
            if not _known(arity, op, other, result):
                raise serializers.ValidationError({"compositions": f"Composition of {op!r} names an unknown operation."})
            if not isinstance(i, int) or isinstance(i, bool):
                raise serializers.ValidationError({"compositions": f"Position {i!r} is not an integer."})
            if arity[result] != arity[op] + arity[other] - 1:
                raise serializers.ValidationError({"compositions": f"Result {result!r} has the wrong arity."})
            compositions[(op, i, other)] = result

        attrs["actions"] = actions
        attrs["compositions"] = compositions
        return attrs


def _known(arity, *names):
    return all(isinstance(name, str) and name in arity for name in names)


def _is_permutation(raw, n):
    try:
        return isinstance(raw, list) and sorted(raw) == list(range(n))
    except TypeError:
        return False
