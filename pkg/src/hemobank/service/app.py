"""Application factory wiring storage, auth, clock, and routes together.

All handlers are plain `def` functions: FastAPI runs them on the thread
pool, so CPU-bound password hashing never blocks unrelated requests, and
the stores' internal locking carries the concurrency guarantees.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from ..auth import AuthService, PasswordHasher, SessionStore
from ..clock import Clock, SystemClock
from ..config import AppConfig
from ..storage import Store, create_store
from . import routes_admin, routes_auth, routes_profiles, routes_requests, routes_social
from .errors import install_error_handlers


def create_app(
    store: Store | None = None,
    clock: Clock | None = None,
    config: AppConfig | None = None,
) -> FastAPI:
    config = config or AppConfig.from_env()
    clock = clock or SystemClock()
    if store is None:
        store = create_store(config.database_url, now_fn=clock.now)

    sessions = SessionStore()
    auth = AuthService(
        store,
        PasswordHasher(iterations=config.hash_cost),
        sessions,
        clock,
        token_ttl_hours=config.token_ttl_hours,
    )

    app = FastAPI(
        title="hemobank",
        version="0.1.0",
        openapi_url="/api/openapi.json",
        docs_url="/api/docs",
        redoc_url=None,
    )
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"] if config.ui_origin == "*" else [config.ui_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    app.state.config = config
    app.state.clock = clock
    app.state.store = store
    app.state.sessions = sessions
    app.state.auth = auth

    install_error_handlers(app)
    for module in (routes_auth, routes_profiles, routes_requests, routes_admin, routes_social):
        app.include_router(module.router, prefix="/api")
    return app
