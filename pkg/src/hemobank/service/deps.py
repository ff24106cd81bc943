"""Request dependencies: bearer-token extraction and role guards."""

from __future__ import annotations

from fastapi import Depends, Request

from ..auth import Session
from ..storage import RoleKind
from .errors import ApiError


def bearer_token(request: Request) -> str | None:
    header = request.headers.get("authorization", "")
    scheme, _, token = header.partition(" ")
    if scheme.lower() == "bearer" and token.strip():
        return token.strip()
    return None


def _decide(request: Request, required_role: RoleKind | None) -> Session:
    decision = request.app.state.auth.authorize(bearer_token(request), required_role)
    if decision.allowed:
        return decision.session
    if decision.reason == "ROLE_MISSING":
        raise ApiError(403, "ROLE_MISSING", f"requires the {required_role.value} role")
    raise ApiError(401, decision.reason, "authentication required")


def require_session(request: Request) -> Session:
    """Any authenticated user."""
    return _decide(request, None)


def require_role(role: RoleKind):
    def dependency(request: Request) -> Session:
        return _decide(request, role)

    return Depends(dependency)
