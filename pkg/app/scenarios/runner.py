"""
Scenario and sweep orchestration behind the run and sweep commands.

Sweep points go out as Celery tasks and are assembled in submission order;
all files are written from this process only.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

from utils.exceptions import ConfigurationError

from .analyses import ScenarioResult, evaluate_config
from .choices import PointStatus
from .config import check_axis, point_config
from .tasks import evaluate_sweep_point
from .writers import format_cell, write_csv, write_effective_config, write_result

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = (
    "status",
    "alpha0",
    "n0",
    "T_fact",
    "T_prep",
    "z",
    "case",
    "p",
    "q",
    "coeff",
    "energy_regime",
    "flow_dir",
    "N",
    "n_intervals",
    "verdict",
    "detail",
)
SUMMARY_COLUMNS = ("status", "energy_regime", "flow_dir", "verdict")


def run_scenario(config):
    """Evaluate and write one scenario; nothing is written when it fails"""
    result = evaluate_config(config)
    if result.status != PointStatus.FAILED:
        write_result(result, config["output"], config)
    return result


def sweep_row(axis, value, result):
    point = {**result.point, "status": str(result.status), "detail": result.detail}
    return (value,) + tuple(point.get(column) for column in SWEEP_COLUMNS)


def _summary_lines(axis, rows, failures):
    header = (axis,) + SUMMARY_COLUMNS
    picked = [
        (row[0],) + tuple(row[1 + SWEEP_COLUMNS.index(column)] for column in SUMMARY_COLUMNS)
        for row in rows
    ]
    cells = [[format_cell(value) for value in row] for row in picked]
    widths = [max(len(str(text)) for text in column) for column in zip(header, *cells)]
    lines = [
        f"sweep: {axis} over {len(rows)} points",
        f"failed: {len(failures)}",
        "",
        " | ".join(name.ljust(width) for name, width in zip(header, widths)).rstrip(),
    ]
    lines.extend(
        " | ".join(text.ljust(width) for text, width in zip(row, widths)).rstrip()
        for row in cells
    )
    for value, detail in failures:
        lines.append(f"failed {axis}={format_cell(value)}: {detail}")
    return lines


@dataclass(frozen=True)
class SweepOutcome:
    axis: str
    rows: tuple
    failures: tuple
    directory: Path

    @property
    def partial(self):
        return bool(self.failures)


def run_sweep(config, axis, values, output=None):
    check_axis(config, axis)
    directory = Path(output or config["output"])

    prepared = []
    for index, value in enumerate(values):
        try:
            point = point_config(config, axis, value, directory / f"{axis}_{index:03d}")
        except ConfigurationError as exc:
            logger.warning("sweep point %s=%g rejected: %s", axis, value, exc)
            prepared.append((value, None, str(exc)))
        else:
            point["name"] = f"{config['name']}[{axis}={format_cell(float(value))}]"
            prepared.append((value, point, None))

    jobs = [evaluate_sweep_point.delay(point) if point else None for _, point, _ in prepared]

    rows, failures = [], []
    for (value, point, error), job in zip(prepared, jobs):
        if job is None:
            result = ScenarioResult(name=str(value), status=PointStatus.FAILED, detail=error)
        else:
            result = ScenarioResult.from_dict(job.get())
        if result.status == PointStatus.FAILED:
            failures.append((value, result.detail))
        else:
            write_result(result, point["output"], point)
        rows.append(sweep_row(axis, value, result))

    directory.mkdir(parents=True, exist_ok=True)
    write_csv(directory / f"sweep_{axis}.csv", (axis,) + SWEEP_COLUMNS, rows)
    (directory / "summary.txt").write_text(
        "\n".join(_summary_lines(axis, rows, failures)) + "\n", encoding="utf-8"
    )
    plan = {"axis": str(axis), "values": [float(value) for value in values]}
    echo = {**config, "output": str(directory), "sweep": plan}
    write_effective_config(directory / "effective_config.yaml", echo)
    logger.info("sweep over %s: %d points, %d failed", axis, len(rows), len(failures))
    return SweepOutcome(axis, tuple(rows), tuple(failures), directory)
