"""Storage backends behind one repository contract.

Two backends: `memory://` (tests, ephemeral demos) and `sqlite:///path.db`
(durable deployment). The backend is chosen by the DATABASE_URL connection
string.
"""

from __future__ import annotations

from . import errors
from .base import SCHEMA_VERSION, NowFn, Store
from .memory import InMemoryStore
from .rows import (
    AdminRow,
    BloodRequestRow,
    ConversationSummary,
    DonationRow,
    DonorRow,
    DonorWithUser,
    MessageRow,
    NotificationKind,
    NotificationRow,
    PatientRow,
    RequestStatus,
    REQUEST_TRANSITIONS,
    RoleKind,
    UserRow,
)
from .sqlite import SqliteStore


def create_store(database_url: str, now_fn: NowFn | None = None) -> Store:
    """Open a store from a connection string.

    Supported forms: `memory://`, `sqlite:///relative/path.db`,
    `sqlite:////absolute/path.db`, and `sqlite:///:memory:`.
    """
    url = (database_url or "").strip()
    if not url:
        raise ValueError("DATABASE_URL is empty")
    if url in ("memory://", "memory"):
        return InMemoryStore(now_fn=now_fn)
    if url.startswith("sqlite:///"):
        path = url[len("sqlite:///") :]
        if not path:
            raise ValueError(f"no database path in {database_url!r}")
        return SqliteStore(path, now_fn=now_fn)
    raise ValueError(f"unsupported DATABASE_URL: {database_url!r}")


__all__ = [
    "create_store",
    "errors",
    "Store",
    "SCHEMA_VERSION",
    "NowFn",
    "InMemoryStore",
    "SqliteStore",
    "AdminRow",
    "BloodRequestRow",
    "ConversationSummary",
    "DonationRow",
    "DonorRow",
    "DonorWithUser",
    "MessageRow",
    "NotificationKind",
    "NotificationRow",
    "PatientRow",
    "RequestStatus",
    "REQUEST_TRANSITIONS",
    "RoleKind",
    "UserRow",
]
