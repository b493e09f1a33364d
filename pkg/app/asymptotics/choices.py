from django.db import models
from django.utils.translation import gettext_lazy as _


class Regime(models.TextChoices):
    SHORT_TIME = "short_time", _("Short time")
    LONG_TIME = "long_time", _("Long time")


class EnergyRegime(models.TextChoices):
    INCREASE = "long_time_increase", _("Approaches the asymptote from below")
    DECREASE = "long_time_decrease", _("Approaches the asymptote from above")
    CONSTANT = "constant", _("Constant bath energy")
    REFUSED = "refused", _("No admissible expansion index")


class CaseTag(models.TextChoices):
    QUADRATIC = "quadratic", _("Quadratic short-time growth")
    POWER = "power", _("Inverse power law")
    POWER_LOG = "power_log", _("Power law with logarithmic factor")
    ODD_POWER = "odd_power", _("Odd exponent, pure power law")
    ODD_LOG = "odd_log", _("Odd exponent with logarithmic factor")
    REAL_LOG = "real_log", _("Real logarithmic power")
    REAL_LOG_ODD = "real_log_odd", _("Real logarithmic power, odd exponent")
