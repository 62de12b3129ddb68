# File: TukeyDepthHub/apps/depth/serializers.py

from rest_framework import serializers

from .runner import ALGORITHMS, RunConfig


class RunConfigSerializer(serializers.Serializer):
    """Validates the options of a single depth run"""

    algorithm = serializers.ChoiceField(choices=ALGORITHMS, default='rcom')
    tolerance = serializers.FloatField(min_value=0.0, required=False, allow_null=True)
    threads = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    seed = serializers.IntegerField(min_value=0, default=0)
    trials = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    force = serializers.BooleanField(default=False)
    strict = serializers.BooleanField(default=False)

    def to_config(self):
        data = self.validated_data
        return RunConfig(
            algorithm=data['algorithm'],
            tolerance=data.get('tolerance'),
            threads=data.get('threads'),
            seed=data['seed'],
            trials=data.get('trials'),
            force=data['force'],
            strict=data['strict'],
        )


class DepthRequestSerializer(RunConfigSerializer):
    """Payload of the depth API endpoint"""

    data = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField(), min_length=2),
        min_length=1,
    )
    queries = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField(), min_length=2),
        min_length=1,
    )

    def validate(self, attrs):
        width = len(attrs['data'][0])
        if any(len(row) != width for row in attrs['data']):
            raise serializers.ValidationError({'data': 'All rows must have the same length.'})
        if any(len(row) != width for row in attrs['queries']):
            raise serializers.ValidationError(
                {'queries': f'Every query must have {width} coordinates.'}
            )
        if attrs['algorithm'] == 'bivariate' and width != 2:
            raise serializers.ValidationError(
                {'algorithm': 'The bivariate algorithm needs two-dimensional data.'}
            )
        return attrs


class BenchConfigSerializer(serializers.Serializer):
    """Validates a benchmark grid"""

    dims = serializers.ListField(
        child=serializers.IntegerField(min_value=2), min_length=1, required=False
    )
    sizes = serializers.ListField(
        child=serializers.IntegerField(min_value=1), min_length=1, required=False
    )
    alphas = serializers.ListField(child=serializers.FloatField(), default=[0.0, 0.4, 0.8, 1.2])
    reps = serializers.IntegerField(min_value=1, default=3)
    budget = serializers.FloatField(min_value=0.0, required=False, allow_null=True)
    algorithms = serializers.ListField(
        child=serializers.ChoiceField(choices=ALGORITHMS), default=['rcom', 'adia']
    )
    seed = serializers.IntegerField(min_value=0, default=0)
    tolerance = serializers.FloatField(min_value=0.0, required=False, allow_null=True)
    threads = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate_sizes(self, value):
        if any(b <= a for a, b in zip(value, value[1:])):
            raise serializers.ValidationError('Sizes must be strictly increasing.')
        return value

    def validate(self, attrs):
        if not self.context.get('dataset'):
            for name in ('dims', 'sizes'):
                if not attrs.get(name):
                    raise serializers.ValidationError({name: 'This field is required.'})
        return attrs
