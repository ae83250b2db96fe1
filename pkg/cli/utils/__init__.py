from .command import add_numeric_arguments, build_config, execute
from .logger import RichLogger

__all__ = ["RichLogger", "add_numeric_arguments", "build_config", "execute"]
