from logging import Logger

from ..logging import get_logger


class AppObject:
    """
    Base class for application objects.

    Services and stateful helpers derive from it; every subclass gets ``logger``,
    a child of the library logger named after the class.
    """

    logger: Logger

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.logger = get_logger(f"{cls.__module__}.{cls.__name__}")
