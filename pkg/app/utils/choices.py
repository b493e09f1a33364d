from django.db import models
from django.utils.translation import gettext_lazy as _


class GridKind(models.TextChoices):
    UNIFORM = "uniform", _("Uniform")
    LOG = "log", _("Log-spaced")
    EXPLICIT = "explicit", _("Explicit list")
