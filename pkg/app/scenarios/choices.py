from django.db import models
from django.utils.translation import gettext_lazy as _


class Analysis(models.TextChoices):
    TRAJECTORY = "trajectory", _("Trajectory")
    SHORT_TIME = "short_time", _("Short-time expansion")
    LONG_TIME = "long_time", _("Long-time expansion")
    REGIMES = "regimes", _("Energy regimes")
    INFO_FLOW = "info_flow", _("Information flow")
    CORRESPONDENCE = "correspondence", _("Flow and energy correspondence")
    MELLIN_CHECK = "mellin_check", _("Mellin cross-check")


class SweepAxis(models.TextChoices):
    ALPHA0 = "alpha0", _("Leading exponent")
    LOG_POWER = "log_power", _("Leading logarithmic power")
    TEMPERATURE = "temperature", _("Dephasing temperature")
    PREP_TEMPERATURE = "prep_temperature", _("Preparation temperature")
    Z = "z", _("Projection of the measured state")


class PointStatus(models.TextChoices):
    OK = "ok", _("Evaluated")
    REFUSED = "refused", _("No admissible expansion")
    FAILED = "failed", _("Evaluation failed")

