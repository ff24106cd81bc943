from .app import create_app
from .errors import ApiError

__all__ = ["create_app", "ApiError"]
