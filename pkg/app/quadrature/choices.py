from django.db import models
from django.utils.translation import gettext_lazy as _


class Kernel(models.TextChoices):
    COSINE = "cosine", _("cos(omega t)")
    SINE = "sine", _("sin(omega t)")
    VERSINE = "versine", _("1 - cos(omega t)")
    NONE = "none", _("No kernel")


class Strategy(models.TextChoices):
    EXACT = "exact", _("Exact (vanishing kernel)")
    PANELS = "panels", _("Adaptive panels with endpoint transform")
    ZERO_PARTITION = "zero_partition", _("Panels between kernel zeros")
    ACCELERATED = "zero_partition_accelerated", _("Kernel zeros with series acceleration")
    TANH_SINH = "tanh_sinh", _("Tanh-sinh (mpmath)")
