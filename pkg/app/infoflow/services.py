"""
Correspondence between the long-time flow of information and the long-time
trend of the bath energy.

The flow direction is taken for the factorized initial condition at
T_factorized, the energy regime for the correlated preparation at T_prep.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from asymptotics.choices import EnergyRegime
from asymptotics.regimes import classify_energy_regime
from dephasing.services import DephasingState
from utils.exceptions import ExpansionRefused
from utils.validations import validate_non_negative

from .choices import Basis, FlowDirection, Verdict
from .intervals import MeasureResult, non_markovianity
from .rates import FlowTable, classify_flow_direction, flow_table

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "alpha0",
    "n0",
    "T_fact",
    "T_prep",
    "N",
    "n_intervals",
    "flow_dir",
    "energy_regime",
    "verdict",
)


def verdict_for(alpha0, direction, regime):
    if regime == EnergyRegime.CONSTANT:
        return Verdict.NOT_APPLICABLE
    if alpha0 <= 1.0 and direction == FlowDirection.LOSS and regime == EnergyRegime.INCREASE:
        return Verdict.SUB_OHMIC_PAIRING
    if (direction, regime) in (
        (FlowDirection.BACKFLOW, EnergyRegime.INCREASE),
        (FlowDirection.LOSS, EnergyRegime.DECREASE),
    ):
        return Verdict.MATCH
    return Verdict.MISMATCH


@dataclass(frozen=True)
class FlowReport:
    alpha0: float
    n0: float
    t_factorized: float
    t_prep: float
    measure: MeasureResult
    direction: str
    energy_regime: str
    verdict: str
    basis: str
    table: Optional[FlowTable] = None
    warnings: tuple = field(default=())

    @property
    def intervals(self):
        return self.measure.intervals

    @property
    def scan_agrees(self):
        """Backflow iff the rate is still negative at the end of the scan"""
        backflow = bool(self.intervals) and self.intervals[-1].open_ended
        return backflow == (self.direction == FlowDirection.BACKFLOW)

    @property
    def table_agrees(self):
        return self.table is None or self.table.broad == self.direction

    @property
    def narrative(self):
        text = {
            Verdict.MATCH: (
                f"{self.direction} with {self.energy_regime}: bath energy follows "
                f"the information flow"
            ),
            Verdict.MISMATCH: (
                f"{self.direction} with {self.energy_regime}: bath energy does not "
                f"follow the information flow"
            ),
            Verdict.SUB_OHMIC_PAIRING: (
                "information is lost while the bath energy increases, as expected "
                "in the sub-ohmic and ohmic regime"
            ),
            Verdict.NOT_APPLICABLE: "the bath energy is constant for this preparation",
        }[self.verdict]
        if self.alpha0 <= 1.0 and self.verdict != Verdict.SUB_OHMIC_PAIRING:
            text += " (outside the super-ohmic regime)"
        return text

    def csv_row(self):
        return (
            self.alpha0,
            self.n0,
            self.t_factorized,
            self.t_prep,
            self.measure.value,
            len(self.intervals),
            str(self.direction),
            str(self.energy_regime),
            str(self.verdict),
        )


def correspondence_report(
    prep, model, t_factorized, t_max=None, tolerance=None, measure=None
):
    validate_non_negative(t_factorized, "t_factorized")
    state = DephasingState(model, temperature=t_factorized, tolerance=tolerance)

    regime = classify_energy_regime(prep, model)
    if regime == EnergyRegime.REFUSED:
        raise ExpansionRefused(
            f"no admissible energy expansion for alpha0={model.alpha0:g}"
        )
    direction = classify_flow_direction(state)

    table = None
    basis = Basis.NUMERICS
    if state.is_thermal:
        table = flow_table(model)
        basis = Basis.TABLE

    if measure is None:
        measure = non_markovianity(state, t_max)
    verdict = verdict_for(model.alpha0, direction, regime)
    report = FlowReport(
        alpha0=model.alpha0,
        n0=model.log_power0,
        t_factorized=t_factorized,
        t_prep=prep.prep_temperature,
        measure=measure,
        direction=direction,
        energy_regime=regime,
        verdict=verdict,
        basis=basis,
        table=table,
        warnings=measure.warnings,
    )

    if not report.scan_agrees:
        logger.warning(
            "alpha0=%g: rate coefficient gives %s but the scan up to t_max disagrees",
            model.alpha0,
            direction,
        )
    if table is not None and table.ambiguous:
        logger.info("alpha0=%g: flow table readings differ on the n0 condition", model.alpha0)
    logger.info("alpha0=%g: %s", model.alpha0, report.narrative)
    return report
