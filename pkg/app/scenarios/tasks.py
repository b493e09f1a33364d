from celery import shared_task
from celery.utils.log import get_task_logger

from .analyses import ScenarioResult, evaluate_config
from .choices import PointStatus

logger = get_task_logger(__name__)


@shared_task
def evaluate_sweep_point(config):
    """Evaluate one sweep point; every failure comes back as a result row"""
    logger.info("Evaluating sweep point %s", config["name"])
    try:
        result = evaluate_config(config)
    except Exception as exc:
        logger.exception("Sweep point %s crashed", config["name"])
        result = ScenarioResult(
            name=config["name"], status=PointStatus.FAILED, detail=f"{type(exc).__name__}: {exc}"
        )
    return result.as_dict()
