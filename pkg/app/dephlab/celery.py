import os
from celery import Celery
from django.conf import settings

# Set the default Django settings module
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "dephlab.settings")

app = Celery("dephlab")

# Using a string here means the worker doesn't have to serialize
# the configuration object to child processes.
app.config_from_object("django.conf:settings", namespace="CELERY")

# Load task modules from all registered Django app configs.
app.autodiscover_tasks(lambda: settings.INSTALLED_APPS)

app.conf.update(
    result_expires=3600,
    # Sweep points are CPU bound; one at a time per worker process
    worker_prefetch_multiplier=1,
    worker_max_tasks_per_child=100,
    task_default_queue="sweeps",
)
