"""Registration and login."""

from __future__ import annotations

from fastapi import APIRouter, Request

from .schemas import LoginIn, LoginOut, RegisterIn, RegisterOut

router = APIRouter(tags=["auth"])


@router.post("/register", status_code=201, response_model=RegisterOut)
def register(body: RegisterIn, request: Request):
    user_id = request.app.state.auth.register(body.name, body.email, body.password)
    return {"user_id": user_id}


@router.post("/login", response_model=LoginOut)
def login(body: LoginIn, request: Request):
    session = request.app.state.auth.login(body.email, body.password)
    return {
        "token": session.token,
        "expires_at": session.expires_at,
        "roles": sorted(role.value for role in session.roles),
    }
