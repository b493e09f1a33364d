"""
Evaluation of one scenario into result tables.

Each requested analysis yields one or more tables; nothing touches the disk
here. Refusals are recorded in the rows, other lab errors fail the scenario.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from asymptotics.choices import EnergyRegime
from asymptotics.expansions import long_time_expansion, short_time_expansion
from asymptotics.mellin import decay_conditions, verify_mellin
from asymptotics.regimes import energy_regime_report
from dephasing.services import DephasingState, sample
from energy.preparation import d0
from energy.services import bath_energy, bath_energy_initial
from infoflow.choices import Basis
from infoflow.intervals import non_markovianity
from infoflow.rates import classify_flow_direction
from infoflow.services import CSV_HEADER, correspondence_report
from spectral.validators import validate
from utils.exceptions import ExpansionRefused, LabError

from .builders import build_scenario
from .choices import Analysis, PointStatus

logger = logging.getLogger(__name__)

TRAJECTORY_HEADER = ("t", "Lambda", "gamma", "Xi", "coherence", "eps_E_delta", "eps_SE_delta")
ENERGY_HEADER = ("t", "eps_E", "eps_SE")
EXPANSION_HEADER = ("case", "p", "q", "coeff", "k0", "k1", "k2")
REGIME_HEADER = (
    "alpha0",
    "n0",
    "regime",
    "table_broad",
    "table_strict",
    "ambiguous",
    "table_agrees",
    "case",
    "p",
    "q",
    "coeff",
)
INFO_FLOW_HEADER = (
    "T",
    "N",
    "n_intervals",
    "first_crossing",
    "lower_bound",
    "tail_estimate",
    "flow_dir",
    "basis",
)
INTERVAL_HEADER = ("T", "t_start", "t_end", "min_rate", "open_ended", "contribution")
MELLIN_HEADER = (
    "s_real",
    "s_imag",
    "closed_real",
    "closed_imag",
    "numerical_real",
    "numerical_imag",
    "relative_error",
    "passed",
)
REFUSED = str(PointStatus.REFUSED)


def _value(value):
    """Plain Python scalars so results survive JSON transport"""
    if value is None or isinstance(value, str):
        return value if value is None else str(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(value)


@dataclass(frozen=True)
class ResultTable:
    name: str
    header: tuple
    rows: tuple

    @classmethod
    def build(cls, name, header, rows):
        rows = tuple(tuple(_value(value) for value in row) for row in rows)
        return cls(str(name), tuple(header), rows)

    def as_dict(self):
        return {
            "name": self.name,
            "header": list(self.header),
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["name"], tuple(data["header"]), tuple(tuple(r) for r in data["rows"]))


@dataclass
class ScenarioResult:
    name: str
    status: str = PointStatus.OK
    tables: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    # one joined row for sweep tables
    point: dict = field(default_factory=dict)
    detail: str = ""

    def table(self, name):
        for table in self.tables:
            if table.name == name:
                return table
        raise KeyError(name)

    def as_dict(self):
        return {
            "name": self.name,
            "status": str(self.status),
            "tables": [table.as_dict() for table in self.tables],
            "notes": list(self.notes),
            "warnings": list(self.warnings),
            "point": dict(self.point),
            "detail": self.detail,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            name=data["name"],
            status=data["status"],
            tables=[ResultTable.from_dict(table) for table in data["tables"]],
            notes=list(data["notes"]),
            warnings=list(data["warnings"]),
            point=dict(data["point"]),
            detail=data["detail"],
        )


class ScenarioEvaluation:
    """Runs the requested analyses of a scenario in a fixed order"""

    def __init__(self, scenario):
        self.scenario = scenario
        self.result = ScenarioResult(name=scenario.name)
        self._measures = {}

    @property
    def model(self):
        return self.scenario.model

    @property
    def prep(self):
        return self.scenario.preparation

    def state(self, temperature):
        return DephasingState(
            self.model, temperature=temperature, tolerance=self.scenario.tolerance
        )

    def measure(self, temperature):
        if temperature not in self._measures:
            self._measures[temperature] = non_markovianity(
                self.state(temperature), self.scenario.t_max
            )
        return self._measures[temperature]

    def refuse(self, analysis, exc):
        self.result.status = PointStatus.REFUSED
        self.result.detail = str(exc)
        self.result.notes.append(f"{analysis}: refused, {exc}")

    def add(self, name, header, rows):
        self.result.tables.append(ResultTable.build(name, header, rows))

    def run(self):
        model = self.model
        self.result.point.update(
            alpha0=model.alpha0,
            n0=model.log_power0,
            T_fact=self.scenario.temperatures[0],
            T_prep=self.prep.prep_temperature,
            z=self.prep.z,
        )
        self.result.notes.append(
            f"model: {model.class_tag} alpha0={model.alpha0:g} n0={model.log_power0:g} "
            f"d0={d0(self.prep):.12g}"
        )
        report = validate(model)
        self.result.warnings.extend(
            f"spectral check {check.name} failed: {check.detail}" for check in report.failures()
        )
        if report.conditions_assumed:
            self.result.warnings.append("general model: uniform-convergence conditions assumed")

        for analysis in Analysis.values:
            if analysis in self.scenario.analyses:
                logger.debug("scenario %s: running %s", self.scenario.name, analysis)
                getattr(self, analysis)()
        return self.result

    def trajectory(self):
        scenario = self.scenario
        samples = sample(self.state(scenario.temperatures[0]), scenario.grid)
        initial = None
        if scenario.has_absolute_energy:
            initial = bath_energy_initial(
                self.prep,
                self.model,
                modes=scenario.modes,
                mode_density=scenario.mode_density,
                tolerance=scenario.tolerance,
            )
        energy = bath_energy(
            self.prep,
            self.model,
            samples.times,
            initial=initial,
            epsilon_env=scenario.epsilon_env,
            tolerance=scenario.tolerance,
        )
        self.add(
            Analysis.TRAJECTORY,
            TRAJECTORY_HEADER,
            (
                row + (bath, correlation)
                for row, bath, correlation in zip(
                    samples.rows(), energy.bath_delta, energy.correlation_delta
                )
            ),
        )
        if initial is not None:
            correlation = energy.correlation_energy
            if correlation is None:
                correlation = [None] * len(samples.times)
            self.add("energy", ENERGY_HEADER, zip(samples.times, energy.bath_energy, correlation))
            self.result.notes.append(
                f"trajectory: eps_E(0)={initial:.12g} eps_E(inf)={energy.asymptote:.12g}"
            )
        self.result.warnings.extend(samples.warnings)

    def short_time(self):
        expansion = short_time_expansion(self.prep, self.model, self.scenario.tolerance)
        self.add(Analysis.SHORT_TIME, EXPANSION_HEADER, expansion.rows())
        self.result.notes.append(
            f"short_time: eps_E - eps_E(0) ~ {expansion.leading.coeff:.12g} tau^2"
        )
        self.result.warnings.extend(expansion.warnings)

    def long_time(self):
        try:
            expansion = long_time_expansion(self.prep, self.model)
        except ExpansionRefused as exc:
            self.refuse(Analysis.LONG_TIME, exc)
            self.add(Analysis.LONG_TIME, EXPANSION_HEADER, [(REFUSED,) + (None,) * 6])
            return
        rows = list(expansion.rows())
        self.add(Analysis.LONG_TIME, EXPANSION_HEADER, rows)
        case, p, q, coeff = rows[0][:4]
        self.result.point.update(case=case, p=p, q=q, coeff=coeff)
        self.result.notes.append(
            f"long_time: {case} eps_E - eps_E(inf) ~ {coeff:.12g} tau^-{p:g} L^{q:g}"
        )

    def regimes(self):
        report = energy_regime_report(self.prep, self.model)
        if report.expansion is None:
            if report.regime == EnergyRegime.REFUSED:
                self.refuse(Analysis.REGIMES, "no admissible expansion index")
            case = p = q = coeff = None
        else:
            leading = report.expansion.leading
            case, p, q, coeff = (
                report.expansion.source_case, leading.power, leading.log_power, leading.coeff
            )
        self.add(
            Analysis.REGIMES,
            REGIME_HEADER,
            [
                (
                    self.model.alpha0,
                    self.model.log_power0,
                    report.regime,
                    report.table.broad,
                    report.table.strict,
                    report.table.ambiguous,
                    report.table_agrees,
                    case,
                    p,
                    q,
                    coeff,
                )
            ],
        )
        self.result.point["energy_regime"] = str(report.regime)
        self.result.notes.append(f"regimes: {report.regime}")
        self.result.notes.extend(f"regimes: {note}" for note in report.notes)

    def info_flow(self):
        rows, interval_rows = [], []
        for index, temperature in enumerate(self.scenario.temperatures):
            state = self.state(temperature)
            try:
                direction = str(classify_flow_direction(state))
            except ExpansionRefused as exc:
                self.refuse(Analysis.INFO_FLOW, exc)
                direction = REFUSED
            measure = self.measure(temperature)
            first = measure.intervals[0].t_start if measure.intervals else None
            rows.append(
                (
                    temperature,
                    measure.value,
                    len(measure.intervals),
                    first,
                    measure.lower_bound,
                    measure.tail_estimate,
                    direction,
                    Basis.TABLE if state.is_thermal else Basis.NUMERICS,
                )
            )
            interval_rows.extend(
                (temperature, i.t_start, i.t_end, i.min_rate, i.open_ended, contribution)
                for i, contribution in zip(measure.intervals, measure.contributions)
            )
            self.result.warnings.extend(measure.warnings)
            if index == 0:
                self.result.point.update(
                    flow_dir=direction, N=measure.value, n_intervals=len(measure.intervals)
                )
        self.add(Analysis.INFO_FLOW, INFO_FLOW_HEADER, rows)
        self.add("negative_intervals", INTERVAL_HEADER, interval_rows)

    def correspondence(self):
        rows = []
        for index, temperature in enumerate(self.scenario.temperatures):
            try:
                report = correspondence_report(
                    self.prep,
                    self.model,
                    temperature,
                    t_max=self.scenario.t_max,
                    tolerance=self.scenario.tolerance,
                    measure=self.measure(temperature),
                )
            except ExpansionRefused as exc:
                self.refuse(Analysis.CORRESPONDENCE, exc)
                rows.append(
                    (
                        self.model.alpha0,
                        self.model.log_power0,
                        temperature,
                        self.prep.prep_temperature,
                        None,
                        None,
                        REFUSED,
                        REFUSED,
                        REFUSED,
                    )
                )
                continue
            rows.append(report.csv_row())
            self.result.notes.append(f"correspondence at T={temperature:g}: {report.narrative}")
            if report.table is not None and not report.table_agrees:
                self.result.notes.append(
                    f"correspondence at T={temperature:g}: flow table gives {report.table.broad}"
                )
            if index == 0:
                self.result.point.update(
                    flow_dir=str(report.direction),
                    energy_regime=str(report.energy_regime),
                    verdict=str(report.verdict),
                    N=report.measure.value,
                    n_intervals=len(report.intervals),
                )
        self.add(Analysis.CORRESPONDENCE, CSV_HEADER, rows)

    def mellin_check(self):
        checks = verify_mellin(self.model)
        self.add(
            Analysis.MELLIN_CHECK,
            MELLIN_HEADER,
            (
                (
                    c.s.real,
                    c.s.imag,
                    c.closed.real,
                    c.closed.imag,
                    c.numerical.real,
                    c.numerical.imag,
                    c.relative_error,
                    c.passed,
                )
                for c in checks
            ),
        )
        passed = sum(check.passed for check in checks)
        conditions = decay_conditions(self.model)
        self.result.notes.append(
            f"mellin_check: {passed}/{len(checks)} points agree; decay conditions "
            f"{'hold' if conditions.holds else 'fail'} ({conditions.detail})"
        )


def evaluate_scenario(scenario):
    return ScenarioEvaluation(scenario).run()


def evaluate_config(config):
    """Evaluate a validated configuration; lab errors fail the scenario"""
    try:
        return evaluate_scenario(build_scenario(config))
    except LabError as exc:
        logger.warning("scenario %s failed: %s", config.get("name"), exc)
        return ScenarioResult(
            name=config.get("name", ""), status=PointStatus.FAILED, detail=str(exc)
        )
