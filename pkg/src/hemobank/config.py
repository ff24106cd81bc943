"""Runtime configuration from environment variables; flags may override."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .auth import DEFAULT_HASH_ITERATIONS

DEFAULT_PORT = 8080
DEFAULT_TOKEN_TTL_HOURS = 24


@dataclass
class AppConfig:
    database_url: str = ""
    port: int = DEFAULT_PORT
    token_ttl_hours: int = DEFAULT_TOKEN_TTL_HOURS
    hash_cost: int = DEFAULT_HASH_ITERATIONS
    ui_origin: str = "*"

    @classmethod
    def from_env(cls, **overrides) -> "AppConfig":
        values = {
            "database_url": os.environ.get("DATABASE_URL", ""),
            "port": int(os.environ.get("PORT", DEFAULT_PORT)),
            "token_ttl_hours": int(os.environ.get("TOKEN_TTL_HOURS", DEFAULT_TOKEN_TTL_HOURS)),
            "hash_cost": int(os.environ.get("PASSWORD_HASH_COST", DEFAULT_HASH_ITERATIONS)),
            "ui_origin": os.environ.get("UI_ORIGIN", "*"),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        config = cls(**values)
        if not (1 <= config.port <= 65535):
            raise ValueError(f"port out of range: {config.port}")
        return config
