from django.db import models
from django.utils.translation import gettext_lazy as _


class SpectralClass(models.TextChoices):
    CLASS1 = "class1", _("First class (natural log powers)")
    CLASS2 = "class2", _("Second class (real log powers)")
    EXP_CUTOFF = "exp_cutoff", _("Exponential cutoff")
    FINITE_SUPPORT = "finite_support", _("Finite support")
    LOG_EXP_CUTOFF = "log_exp_cutoff", _("Log-modulated exponential cutoff")
