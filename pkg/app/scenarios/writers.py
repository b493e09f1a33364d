"""
Flat-file outputs. CSV: comma separated, '.' decimal, LF line endings and
17 significant digits, so repeated runs are byte-identical.
"""

import csv
import math
from pathlib import Path

import yaml

from .choices import Analysis


def format_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, ".17g")
    return str(value)


def write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])


def write_summary(path, result, extra=()):
    lines = [f"scenario: {result.name}", f"status: {result.status}"]
    if result.detail:
        lines.append(f"detail: {result.detail}")
    lines.extend(result.notes)
    lines.extend(extra)
    if result.warnings:
        lines.append("warnings:")
        lines.extend(f"  - {warning}" for warning in dict.fromkeys(result.warnings))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_effective_config(path, config):
    text = yaml.safe_dump(config, sort_keys=True, default_flow_style=False)
    Path(path).write_text(text, encoding="utf-8")


GNUPLOT_SCRIPT = """\
# Trajectory of the dephasing functions and energy variations
set datafile separator ","
set key autotitle columnhead
set logscale x
set xlabel "omega_s t"
set multiplot layout 2,1
plot "trajectory.csv" using 1:2 with lines, \\
     "" using 1:3 with lines, \\
     "" using 1:5 with lines
plot "trajectory.csv" using 1:6 with lines, \\
     "" using 1:7 with lines
unset multiplot
"""


def write_gnuplot(path):
    Path(path).write_text(GNUPLOT_SCRIPT, encoding="utf-8")


def write_result(result, directory, config):
    """All outputs of one evaluated scenario"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for table in result.tables:
        write_csv(directory / f"{table.name}.csv", table.header, table.rows)
    if any(table.name == Analysis.TRAJECTORY for table in result.tables):
        write_gnuplot(directory / "trajectory.gp")
    write_effective_config(directory / "effective_config.yaml", config)
    write_summary(directory / "summary.txt", result)
    return directory
