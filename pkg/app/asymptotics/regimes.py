import logging
from dataclasses import dataclass
from typing import Optional

from energy.preparation import d0
from spectral.densities import low_frequency_terms
from utils.exceptions import ExpansionRefused

from .choices import EnergyRegime
from .expansions import ExpansionSpec, long_time_expansion
from .indices import odd_natural, select_indices

logger = logging.getLogger(__name__)


def in_upper_band(alpha, closed_right=False):
    """alpha in (3 + 4n, 5 + 4n), or (3 + 4n, 5 + 4n] when closed_right"""
    if alpha <= 3:
        return False
    offset = (alpha - 3.0) % 4.0
    return 0.0 < offset < 2.0 or (closed_right and offset == 2.0)


def _label(increase):
    return EnergyRegime.INCREASE if increase else EnergyRegime.DECREASE


@dataclass(frozen=True)
class TableReading:
    """Interval-table regime under the broad and the strict reading of n0"""

    broad: str
    strict: str

    @property
    def ambiguous(self):
        return self.broad != self.strict


def table_energy_regime(model):
    alpha0, n0 = model.alpha0, model.log_power0
    m = odd_natural(alpha0)
    if m is None:
        broad = 0.0 < alpha0 < 1.0 or in_upper_band(alpha0)
        strict = 0.0 < alpha0 < 1.0 or (in_upper_band(alpha0) and n0 != 0)
        return TableReading(_label(broad), _label(strict))
    if n0 != 0:
        label = _label(m % 2 == 0)
        return TableReading(label, label)
    try:
        indices = select_indices(model)
    except ExpansionRefused:
        return TableReading(EnergyRegime.REFUSED, EnergyRegime.REFUSED)
    alpha = low_frequency_terms(model)[indices.k0].alpha
    label = _label(in_upper_band(alpha, closed_right=True))
    return TableReading(label, label)


def classify_energy_regime(prep, model):
    """Long-time regime from the sign of the leading expansion coefficient"""
    if d0(prep) == 0.0:
        return EnergyRegime.CONSTANT
    try:
        expansion = long_time_expansion(prep, model)
    except ExpansionRefused:
        return EnergyRegime.REFUSED
    coeff = expansion.leading.coeff
    if coeff < 0:
        return EnergyRegime.INCREASE
    if coeff > 0:
        return EnergyRegime.DECREASE
    return EnergyRegime.CONSTANT


@dataclass(frozen=True)
class RegimeReport:
    regime: str
    table: TableReading
    expansion: Optional[ExpansionSpec] = None

    @property
    def table_agrees(self):
        if self.regime == EnergyRegime.CONSTANT:
            return True
        return self.regime == self.table.broad

    @property
    def notes(self):
        notes = []
        if self.table.ambiguous:
            notes.append("interval table readings differ on the n0 condition")
        if not self.table_agrees:
            notes.append(
                f"coefficient sign gives {self.regime}, interval table gives {self.table.broad}"
            )
        return tuple(notes)


def energy_regime_report(prep, model):
    regime = classify_energy_regime(prep, model)
    expansion = None
    if regime != EnergyRegime.REFUSED:
        expansion = long_time_expansion(prep, model)
    report = RegimeReport(regime=regime, table=table_energy_regime(model), expansion=expansion)
    for note in report.notes:
        logger.info("alpha0=%g: %s", model.alpha0, note)
    return report
