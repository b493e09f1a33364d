"""
Domain objects from a validated scenario configuration.

Frequencies are in units of omega_s, so every model is built with scale 1.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from energy.choices import ModeDensityKind
from energy.densities import ExponentialModeDensity, ModeList
from energy.preparation import QubitPreparation
from spectral.choices import SpectralClass
from spectral.densities import SpectralModel
from utils.grids import TimeGrid


def build_model(data):
    family = data["family"]
    amplitude, cutoff = data["amplitude"], data["cutoff"]
    if family == SpectralClass.EXP_CUTOFF:
        return SpectralModel.exp_cutoff(data["alpha0"], amplitude, cutoff, scale=1.0)
    if family == SpectralClass.FINITE_SUPPORT:
        return SpectralModel.finite_support(data["alpha0"], amplitude, cutoff, scale=1.0)
    if family == SpectralClass.LOG_EXP_CUTOFF:
        return SpectralModel.log_exp_cutoff(
            data["alpha0"],
            data["log_power"],
            amplitude,
            cutoff,
            scale=1.0,
            sd_class=data["log_class"],
        )
    decay = data.get("high_freq_decay")
    return SpectralModel.general(
        family,
        [(term["alpha"], term["log_power"], term["coeff"]) for term in data["terms"]],
        amplitude=amplitude,
        cutoff=cutoff,
        scale=1.0,
        high_freq_decay=math.inf if decay is None else decay,
        table=data.get("table") or (),
    )


def build_preparation(data):
    return QubitPreparation(
        omega0=data["omega0"], z=data["z"], prep_temperature=data["temperature"]
    )


def build_mode_source(data):
    """(modes, mode_density) for bath_energy_initial, or (None, None)"""
    source = data.get("mode_density")
    if not source:
        return None, None
    if source["kind"] == ModeDensityKind.EXPONENTIAL:
        return None, ExponentialModeDensity(source["width"])
    return ModeList(tuple(source["frequencies"])), None


def build_grid(data):
    return TimeGrid(
        kind=data["kind"],
        start=data["start"],
        stop=data["stop"],
        points=data["points"],
        explicit=tuple(data.get("values") or ()),
    )


@dataclass(frozen=True)
class Scenario:
    name: str
    model: SpectralModel
    preparation: QubitPreparation
    temperatures: tuple
    grid: TimeGrid
    analyses: tuple
    t_max: float
    tolerance: float
    output: str
    modes: Optional[ModeList] = None
    mode_density: Optional[ExponentialModeDensity] = None
    epsilon_env: Optional[float] = None
    # effective configuration, all defaults resolved
    config: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def has_absolute_energy(self):
        return self.modes is not None or self.mode_density is not None


def build_scenario(config):
    modes, mode_density = build_mode_source(config["preparation"])
    return Scenario(
        name=config["name"],
        model=build_model(config["model"]),
        preparation=build_preparation(config["preparation"]),
        temperatures=tuple(config["dephasing"]["temperatures"]),
        grid=build_grid(config["grid"]),
        analyses=tuple(config["analyses"]),
        t_max=config["info_flow"]["t_max"],
        tolerance=config["tolerance"],
        output=config["output"],
        modes=modes,
        mode_density=mode_density,
        epsilon_env=config["preparation"].get("epsilon_env"),
        config=config,
    )
