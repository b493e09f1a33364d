from django.apps import AppConfig


class DephasingConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "dephasing"
    verbose_name = "Dephasing dynamics"
