from .app import AppObject
from .model import BaseModel

__all__ = ["AppObject", "BaseModel"]
