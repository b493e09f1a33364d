"""
Validation of scenario files.

Every section is a DRF serializer; unknown keys are rejected so that a typo
never silently falls back to a default.
"""

from collections.abc import Mapping

from django.conf import settings
from rest_framework import serializers
from rest_framework.settings import api_settings

from energy.choices import ModeDensityKind
from spectral.choices import SpectralClass
from utils.choices import GridKind
from utils.exceptions import DomainError

from .builders import build_grid, build_model
from .choices import Analysis, SweepAxis

CANONICAL_FAMILIES = (
    SpectralClass.EXP_CUTOFF,
    SpectralClass.FINITE_SUPPORT,
    SpectralClass.LOG_EXP_CUTOFF,
)
SECTIONS = ("model", "preparation", "dephasing", "grid", "info_flow")
NATURAL_LOG_POWER = "Class-1 log powers must be natural numbers."


class StrictSerializer(serializers.Serializer):
    """Serializer that reports keys it does not declare"""

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            unknown = sorted(str(key) for key in data if key not in self.fields)
            if unknown:
                raise serializers.ValidationError({key: ["Unknown key."] for key in unknown})
        return super().to_internal_value(data)


def is_natural(value):
    return value >= 0 and float(value).is_integer()


def plain(value):
    """Nested OrderedDicts and ReturnLists as plain dicts and lists"""
    if isinstance(value, Mapping):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, str):
        # choice enums dump as their value
        return str(value)
    return value


class TermSerializer(StrictSerializer):
    alpha = serializers.FloatField()
    log_power = serializers.FloatField(default=0.0)
    coeff = serializers.FloatField(default=1.0)


class SpectralModelSerializer(StrictSerializer):
    family = serializers.ChoiceField(choices=SpectralClass.choices)
    alpha0 = serializers.FloatField(required=False)
    log_power = serializers.FloatField(default=0.0)
    log_class = serializers.ChoiceField(
        choices=[SpectralClass.CLASS1, SpectralClass.CLASS2], default=SpectralClass.CLASS1
    )
    amplitude = serializers.FloatField(default=1.0)
    cutoff = serializers.FloatField(default=1.0)
    terms = serializers.ListField(child=TermSerializer(), required=False)
    # null means no power-law tail bound is known
    high_freq_decay = serializers.FloatField(required=False, allow_null=True, default=None)
    table = serializers.ListField(
        child=serializers.ListField(
            child=serializers.FloatField(), min_length=2, max_length=2
        ),
        required=False,
    )

    def validate_amplitude(self, value):
        if value <= 0:
            raise serializers.ValidationError("Must be positive.")
        return value

    def validate_cutoff(self, value):
        if value <= 0:
            raise serializers.ValidationError("Must be positive.")
        return value

    def validate(self, data):
        family = data["family"]
        errors = {}
        if family in CANONICAL_FAMILIES:
            if "alpha0" not in data:
                errors["alpha0"] = ["This field is required."]
            elif data["alpha0"] <= 0:
                errors["alpha0"] = ["Must be positive."]
            for key in ("terms", "table"):
                if data.get(key):
                    errors[key] = [f"Not used by the {family} family."]
        else:
            if not data.get("terms"):
                errors["terms"] = ["Class-1 and class-2 models need at least one term."]
            if "alpha0" in data:
                errors["alpha0"] = ["Give the leading exponent as the first term."]
        if data["log_power"] and family != SpectralClass.LOG_EXP_CUTOFF:
            errors["log_power"] = ["Only the log_exp_cutoff family takes log_power."]
        elif family == SpectralClass.LOG_EXP_CUTOFF and data["log_class"] == SpectralClass.CLASS1:
            if not is_natural(data["log_power"]):
                errors["log_power"] = [NATURAL_LOG_POWER]
        if family == SpectralClass.CLASS1:
            bad = [
                index
                for index, term in enumerate(data.get("terms") or ())
                if not is_natural(term["log_power"])
            ]
            if bad:
                errors["terms"] = [f"Term {index}: {NATURAL_LOG_POWER}" for index in bad]
        if errors:
            raise serializers.ValidationError(errors)

        try:
            build_model(data)
        except DomainError as exc:
            raise serializers.ValidationError(str(exc))
        return data


class ModeDensitySerializer(StrictSerializer):
    kind = serializers.ChoiceField(choices=ModeDensityKind.choices)
    width = serializers.FloatField(required=False)
    frequencies = serializers.ListField(
        child=serializers.FloatField(min_value=0.0), required=False
    )

    def validate(self, data):
        if data["kind"] == ModeDensityKind.EXPONENTIAL:
            if not data.get("width", 0) > 0:
                raise serializers.ValidationError({"width": ["A positive width is required."]})
        elif not data.get("frequencies"):
            raise serializers.ValidationError(
                {"frequencies": ["At least one frequency is required."]}
            )
        return data


class PreparationSerializer(StrictSerializer):
    omega0 = serializers.FloatField(default=1.0, min_value=0.0)
    z = serializers.FloatField(default=0.0, min_value=-1.0, max_value=1.0)
    temperature = serializers.FloatField(default=1.0, min_value=0.0)
    mode_density = ModeDensitySerializer(required=False)
    epsilon_env = serializers.FloatField(required=False)

    def validate(self, data):
        if "epsilon_env" in data and "mode_density" not in data:
            raise serializers.ValidationError(
                {"epsilon_env": ["An absolute correlation energy needs a mode_density."]}
            )
        return data


class DephasingSerializer(StrictSerializer):
    temperatures = serializers.ListField(
        child=serializers.FloatField(min_value=0.0), min_length=1, default=lambda: [0.0]
    )


class GridSerializer(StrictSerializer):
    kind = serializers.ChoiceField(choices=GridKind.choices, default=GridKind.LOG)
    start = serializers.FloatField(default=1e-3, min_value=0.0)
    stop = serializers.FloatField(default=1e3)
    points = serializers.IntegerField(default=200, min_value=2)
    values = serializers.ListField(
        child=serializers.FloatField(min_value=0.0), required=False
    )

    def validate(self, data):
        if data["kind"] == GridKind.EXPLICIT and not data.get("values"):
            raise serializers.ValidationError({"values": ["Explicit grids need values."]})
        if data["kind"] != GridKind.EXPLICIT and not data["stop"] > data["start"]:
            raise serializers.ValidationError({"stop": ["Must exceed start."]})
        try:
            build_grid(data).values()
        except DomainError as exc:
            raise serializers.ValidationError(str(exc))
        return data


class InfoFlowSerializer(StrictSerializer):
    t_max = serializers.FloatField(required=False)

    def validate_t_max(self, value):
        if value <= 0:
            raise serializers.ValidationError("Must be positive.")
        return value

    def validate(self, data):
        data.setdefault("t_max", settings.INFO_FLOW_T_MAX)
        return data


class SweepSerializer(StrictSerializer):
    axis = serializers.ChoiceField(choices=SweepAxis.choices)
    values = serializers.ListField(child=serializers.FloatField(), min_length=1)


class ScenarioSerializer(StrictSerializer):
    name = serializers.CharField(default="scenario")
    model = SpectralModelSerializer()
    preparation = PreparationSerializer()
    dephasing = DephasingSerializer()
    grid = GridSerializer()
    info_flow = InfoFlowSerializer()
    analyses = serializers.ListField(
        child=serializers.ChoiceField(choices=Analysis.choices), min_length=1
    )
    tolerance = serializers.FloatField(required=False)
    output = serializers.CharField(default="results")
    sweep = SweepSerializer(required=False)

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            # missing optional sections take their defaults
            data = {**{key: {} for key in SECTIONS if key != "model"}, **data}
        return super().to_internal_value(data)

    def validate_analyses(self, value):
        duplicates = sorted({item for item in value if value.count(item) > 1})
        if duplicates:
            raise serializers.ValidationError(f"Repeated analyses: {', '.join(duplicates)}.")
        return value

    def validate_tolerance(self, value):
        if not 0 < value < 1:
            raise serializers.ValidationError("Must lie in (0, 1).")
        return value

    def validate(self, data):
        if (
            Analysis.MELLIN_CHECK in data["analyses"]
            and data["model"]["family"] != SpectralClass.EXP_CUTOFF
        ):
            raise serializers.ValidationError(
                {"analyses": ["mellin_check needs the exp_cutoff family."]}
            )
        data.setdefault("tolerance", settings.QUADRATURE_RTOL)
        return data


def flatten_errors(detail, prefix=""):
    """DRF error tree as {dotted.key.path: [messages]}"""
    flat = {}
    if isinstance(detail, Mapping):
        for key, value in detail.items():
            if key == api_settings.NON_FIELD_ERRORS_KEY:
                path = prefix or str(key)
            else:
                path = f"{prefix}.{key}" if prefix else str(key)
            for sub_path, messages in flatten_errors(value, path).items():
                flat.setdefault(sub_path, []).extend(messages)
    elif isinstance(detail, (list, tuple)):
        if all(isinstance(item, str) for item in detail):
            flat[prefix] = [str(item) for item in detail]
        else:
            for index, item in enumerate(detail):
                if item:
                    flat.update(flatten_errors(item, f"{prefix}.{index}"))
    else:
        flat[prefix] = [str(detail)]
    return flat
