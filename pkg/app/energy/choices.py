from django.db import models
from django.utils.translation import gettext_lazy as _


class ModeDensityKind(models.TextChoices):
    EXPONENTIAL = "exponential", _("exp(-omega/width)")
    MODES = "modes", _("Explicit mode list")
