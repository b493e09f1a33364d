from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config("DJANGO_SECRET_KEY", default="django-insecure-dephlab")

DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Third-party apps
    "rest_framework",
    # Local apps
    "utils",
    "spectral",
    "quadrature",
    "dephasing",
    "energy",
    "asymptotics",
    "infoflow",
    "scenarios",
]

# Results are flat files only; no database is configured.
DATABASES = {}


# Internationalization
LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Logging
LOG_LEVEL = config("LOG_LEVEL", default="WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app_name: {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False}
        for app_name in (
            "spectral",
            "quadrature",
            "dephasing",
            "energy",
            "asymptotics",
            "infoflow",
            "scenarios",
        )
    },
}


# Quadrature engine
QUADRATURE_RTOL = config("QUADRATURE_RTOL", default=1e-10, cast=float)
QUADRATURE_ABS_FLOOR = config("QUADRATURE_ABS_FLOOR", default=1e-14, cast=float)
QUADRATURE_MAX_EVALUATIONS = config(
    "QUADRATURE_MAX_EVALUATIONS", default=1_000_000, cast=int
)
QUADRATURE_GAUSS_NODES = config("QUADRATURE_GAUSS_NODES", default=20, cast=int)
# Beyond this many half-period panels the alternating series is accelerated
QUADRATURE_DIRECT_PANELS = config("QUADRATURE_DIRECT_PANELS", default=2048, cast=int)
QUADRATURE_MIN_PERIODS = config("QUADRATURE_MIN_PERIODS", default=8, cast=int)

# Spectral densities
SPECTRAL_GRID_POINTS = config("SPECTRAL_GRID_POINTS", default=10_000, cast=int)
SPECTRAL_EXPANSION_TERMS = config("SPECTRAL_EXPANSION_TERMS", default=6, cast=int)

# Asymptotics
ODD_INTEGER_TOLERANCE = config("ODD_INTEGER_TOLERANCE", default=1e-9, cast=float)
FIT_WINDOW = config("FIT_WINDOW", default="1e2,1e4", cast=Csv(float))
MELLIN_RANDOM_POINTS = config("MELLIN_RANDOM_POINTS", default=20, cast=int)
MELLIN_SEED = config("MELLIN_SEED", default=20240601, cast=int)

# Information flow
ROOT_TOLERANCE = config("ROOT_TOLERANCE", default=1e-8, cast=float)
TANGENT_THRESHOLD = config("TANGENT_THRESHOLD", default=1e-12, cast=float)
SCAN_GRID_POINTS = config("SCAN_GRID_POINTS", default=1000, cast=int)
INFO_FLOW_T_MAX = config("INFO_FLOW_T_MAX", default=1e3, cast=float)
# quad cannot resolve |gamma| e^(-Xi) below this relative accuracy
MEASURE_RTOL_FLOOR = config("MEASURE_RTOL_FLOOR", default=1e-9, cast=float)


# Celery Configuration
# Eager by default: sweeps run in-process unless a broker is configured.
CELERY_BROKER_URL = config("CELERY_BROKER_URL", default="memory://")
CELERY_RESULT_BACKEND = config("CELERY_BACKEND_URL", default="cache+memory://")
CELERY_TASK_ALWAYS_EAGER = config("CELERY_TASK_ALWAYS_EAGER", default=True, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TIMEZONE = "UTC"
CELERY_ENABLE_UTC = True
CELERY_TASK_TRACK_STARTED = True
CELERY_TASK_TIME_LIMIT = 30 * 60  # 30 minutes
CELERY_TASK_SOFT_TIME_LIMIT = 20 * 60  # 20 minutes
