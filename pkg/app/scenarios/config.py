"""
Loading scenario files: YAML parsing, validation and line diagnostics.
"""

import copy
import logging
from pathlib import Path

import yaml

from spectral.choices import SpectralClass
from utils.exceptions import ConfigurationError

from .choices import SweepAxis
from .serializers import ScenarioSerializer, flatten_errors, plain

logger = logging.getLogger(__name__)

# where each sweep axis lives in the configuration
AXIS_PATHS = {
    SweepAxis.ALPHA0: ("model", "alpha0"),
    SweepAxis.LOG_POWER: ("model", "log_power"),
    SweepAxis.PREP_TEMPERATURE: ("preparation", "temperature"),
    SweepAxis.Z: ("preparation", "z"),
}


def key_lines(text):
    """1-based line of every dotted key path in a YAML document"""
    lines = {}

    def walk(node, prefix):
        if isinstance(node, yaml.MappingNode):
            for key_node, value_node in node.value:
                path = f"{prefix}.{key_node.value}" if prefix else str(key_node.value)
                lines[path] = key_node.start_mark.line + 1
                walk(value_node, path)
        elif isinstance(node, yaml.SequenceNode):
            for index, item in enumerate(node.value):
                path = f"{prefix}.{index}"
                lines[path] = item.start_mark.line + 1
                walk(item, path)

    root = yaml.compose(text, Loader=yaml.SafeLoader)
    if root is not None:
        walk(root, "")
    return lines


def _line_for(path, lines):
    """Line of the key, or of its closest present parent"""
    parts = path.split(".")
    while parts:
        line = lines.get(".".join(parts))
        if line is not None:
            return line
        parts.pop()
    return None


def validate_config(raw, text="", source="<config>"):
    """Validated configuration with every default resolved"""
    if not isinstance(raw, dict):
        raise ConfigurationError(
            f"{source}: a scenario file must be a mapping", errors={"": ["Not a mapping."]}
        )
    serializer = ScenarioSerializer(data=raw)
    if serializer.is_valid():
        return plain(serializer.validated_data)

    lines = key_lines(text) if text else {}
    errors = {}
    for path, messages in sorted(flatten_errors(serializer.errors).items()):
        line = _line_for(path, lines)
        where = f"{source}:{line}" if line else source
        errors[path] = [f"{where}: {path}: {message}" for message in messages]
    first = next(iter(errors.values()))[0]
    logger.info("configuration %s rejected with %d errors", source, len(errors))
    raise ConfigurationError(first, errors=errors)


def parse_config(text, source="<config>"):
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"{source}:{mark.line + 1}" if mark is not None else source
        problem = getattr(exc, "problem", None) or str(exc)
        raise ConfigurationError(
            f"{where}: invalid YAML: {problem}", errors={"yaml": [f"{where}: {problem}"]}
        )
    return validate_config(raw, text, source)


def load_config(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(
            f"{path}: cannot read scenario file: {exc.strerror}", errors={"": [str(exc)]}
        )
    return parse_config(text, source=str(path))


def apply_overrides(config, tolerance=None, output=None):
    config = copy.deepcopy(config)
    if tolerance is not None:
        config["tolerance"] = tolerance
    if output is not None:
        config["output"] = str(output)
    return validate_config(config)


def point_config(config, axis, value, output):
    """Configuration of one sweep point, validated again"""
    config = copy.deepcopy(config)
    config.pop("sweep", None)
    if axis == SweepAxis.TEMPERATURE:
        config["dephasing"]["temperatures"] = [value]
    else:
        section, key = AXIS_PATHS[axis]
        config[section][key] = value
    config["output"] = str(output)
    return validate_config(config, source=f"{axis}={value:g}")


def check_axis(config, axis):
    family = config["model"]["family"]
    if axis == SweepAxis.ALPHA0 and "alpha0" not in config["model"]:
        raise ConfigurationError(
            f"the {family} family sets alpha0 through its terms; it cannot be swept",
            errors={"sweep.axis": [f"alpha0 cannot be swept for {family} models"]},
        )
    if axis == SweepAxis.LOG_POWER and family != SpectralClass.LOG_EXP_CUTOFF:
        raise ConfigurationError(
            "only log_exp_cutoff models take log_power",
            errors={"sweep.axis": [f"log_power cannot be swept for {family} models"]},
        )
