from logging import DEBUG, Logger, NullHandler, getLogger

from .config import settings

logger = getLogger(settings.app.name)
logger.addHandler(NullHandler())

if settings.debug:
    logger.setLevel(DEBUG)


def get_logger(module_name: str) -> Logger:
    return logger.getChild(module_name)
