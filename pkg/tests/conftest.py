from __future__ import annotations

from datetime import datetime, timezone

import pytest
from fastapi.testclient import TestClient

from hemobank.clock import FixedClock
from hemobank.config import AppConfig
from hemobank.service import create_app
from hemobank.storage import InMemoryStore, SqliteStore

# Low PBKDF2 cost keeps auth-heavy tests fast; production default is higher.
TEST_HASH_COST = 1000

START = datetime(2025, 6, 15, 12, 0, 0, tzinfo=timezone.utc)


@pytest.fixture
def clock() -> FixedClock:
    return FixedClock(START)


@pytest.fixture
def store(clock):
    s = InMemoryStore(now_fn=clock.now)
    s.migrate()
    return s


@pytest.fixture(params=["memory", "sqlite"])
def any_store(request, clock, tmp_path):
    """Both backends behind the same contract; parametrized tests run twice."""
    if request.param == "memory":
        s = InMemoryStore(now_fn=clock.now)
    else:
        s = SqliteStore(str(tmp_path / "test.db"), now_fn=clock.now)
    s.migrate()
    yield s
    s.close()


def build_app(store, clock):
    config = AppConfig(database_url="memory://", hash_cost=TEST_HASH_COST)
    return create_app(store=store, clock=clock, config=config)


@pytest.fixture
def app(store, clock):
    return build_app(store, clock)


@pytest.fixture
def client(app) -> TestClient:
    return TestClient(app)


# -- API helpers ---------------------------------------------------------


def register_and_login(client, name, email, password="s3cretpw") -> str:
    r = client.post("/api/register", json={"name": name, "email": email, "password": password})
    assert r.status_code == 201, r.text
    return login(client, email, password)


def login(client, email, password="s3cretpw") -> str:
    r = client.post("/api/login", json={"email": email, "password": password})
    assert r.status_code == 200, r.text
    return r.json()["token"]


def auth(token: str) -> dict:
    return {"Authorization": f"Bearer {token}"}


def enroll_donor(client, token, phone="0987654321", city="Sukot", blood_group="A+", available=True):
    r = client.post(
        "/api/donor/profile",
        json={"phone": phone, "city": city, "blood_group": blood_group, "available": available},
        headers=auth(token),
    )
    assert r.status_code in (200, 201), r.text
    return r.json()


def enroll_patient(client, token, phone="0321654987", city="Sukot"):
    r = client.post(
        "/api/patient/profile", json={"phone": phone, "city": city}, headers=auth(token)
    )
    assert r.status_code in (200, 201), r.text
    return r.json()


def make_admin(app, name="Root", email="root@test.com", password="s3cretpw"):
    """Create an admin account directly against the store (CLI bootstrap path)."""
    store = app.state.store
    user = store.insert_user(name, email, app.state.auth.hasher.hash(password))
    from hemobank.storage import RoleKind

    store.upsert_role(user.user_id, RoleKind.ADMIN, {})
    return email
