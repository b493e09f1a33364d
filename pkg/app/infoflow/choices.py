from django.db import models
from django.utils.translation import gettext_lazy as _


class FlowDirection(models.TextChoices):
    BACKFLOW = "backflow", _("Information flows back into the qubit")
    LOSS = "loss", _("Information is lost to the environment")


class Verdict(models.TextChoices):
    MATCH = "match", _("Flow direction and energy regime correspond")
    MISMATCH = "mismatch", _("Flow direction and energy regime disagree")
    SUB_OHMIC_PAIRING = "sub_ohmic_pairing", _("Loss with increasing bath energy")
    NOT_APPLICABLE = "not_applicable", _("Bath energy is constant")


class Basis(models.TextChoices):
    TABLE = "table", _("Interval table at non-vanishing temperature")
    NUMERICS = "numerics", _("Rate coefficient and scan only")
