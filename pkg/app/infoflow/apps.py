from django.apps import AppConfig


class InfoflowConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "infoflow"
    verbose_name = "Information flow"
