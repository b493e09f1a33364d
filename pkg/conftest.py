import os

import django

# Mirror tox.ini: tests run against the project settings.
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "dephlab.settings")
django.setup()
