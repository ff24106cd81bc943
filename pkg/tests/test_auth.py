"""Password hashing, sessions, and the authorize decision."""

from datetime import datetime, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hemobank.auth import (
    AuthService,
    InvalidCredentials,
    PasswordHasher,
    PasswordPolicyError,
    SessionStore,
    ValidationFailed,
)
from hemobank.clock import FixedClock
from hemobank.storage import InMemoryStore, RoleKind

COST = 500


@pytest.fixture
def hasher():
    return PasswordHasher(iterations=COST)


@pytest.fixture
def service(clock):
    store = InMemoryStore(now_fn=clock.now)
    store.migrate()
    return AuthService(store, PasswordHasher(iterations=COST), SessionStore(), clock, 24)


# -- hashing ------------------------------------------------------------------


def test_hash_verify_round_trip(hasher):
    h = hasher.hash("s3cretpw")
    assert hasher.verify(h, "s3cretpw")
    assert not hasher.verify(h, "s3cretpx")


@settings(max_examples=25)
@given(st.text(min_size=8, max_size=72))
def test_hash_round_trip_property(password):
    hasher = PasswordHasher(iterations=10)
    h = hasher.hash(password)
    assert hasher.verify(h, password)
    assert not hasher.verify(h, password + "x")


def test_same_password_hashes_differently(hasher):
    assert hasher.hash("s3cretpw") != hasher.hash("s3cretpw")


def test_hash_embeds_cost_and_salt(hasher):
    scheme, iters, salt, digest = hasher.hash("pw123456").split("$")
    assert scheme == "pbkdf2_sha256"
    assert int(iters) == COST
    assert len(bytes.fromhex(salt)) == 16


def test_verify_tolerates_garbage(hasher):
    assert not hasher.verify("not-a-hash", "pw")
    assert not hasher.verify("", "pw")


# -- sessions ------------------------------------------------------------------


def test_tokens_have_no_duplicates_in_10k():
    sessions = SessionStore()
    expires = datetime(2030, 1, 1, tzinfo=timezone.utc)
    tokens = {sessions.create(1, set(), expires).token for _ in range(10_000)}
    assert len(tokens) == 10_000


def test_revoked_token_authorizes_nothing(service):
    service.register("Donor1", "donor1@test.com", "s3cretpw")
    session = service.login("donor1@test.com", "s3cretpw")
    assert service.authorize(session.token).allowed
    service.sessions.revoke(session.token)
    decision = service.authorize(session.token)
    assert not decision.allowed
    assert decision.reason == "NO_TOKEN"


# -- register -------------------------------------------------------------------


def test_register_returns_new_id(service):
    assert service.register("Donor1", "donor1@test.com", "s3cretpw") == 1


def test_register_validation_failure(service):
    with pytest.raises(ValidationFailed) as exc:
        service.register("", "x@y.co", "s3cretpw")
    assert exc.value.report.missing_fields == ["name"]


def test_register_password_policy(service):
    with pytest.raises(PasswordPolicyError):
        service.register("A", "a@b.co", "short")
    with pytest.raises(PasswordPolicyError):
        service.register("A", "a@b.co", "x" * 73)


def test_register_duplicate_email(service):
    service.register("Donor1", "donor1@test.com", "s3cretpw")
    from hemobank.storage.errors import DuplicateEmail

    with pytest.raises(DuplicateEmail):
        service.register("A", "donor1@test.com", "s3cretpw")


def test_password_never_stored_in_clear(service):
    service.register("Donor1", "donor1@test.com", "s3cretpw")
    user = service.store.get_user_by_email("donor1@test.com")
    assert "s3cretpw" not in user.password_hash


# -- login ----------------------------------------------------------------------


def test_login_reads_roles(service):
    uid = service.register("Donor1", "donor1@test.com", "s3cretpw")
    service.store.upsert_role(
        uid, RoleKind.DONOR, {"phone": "12345", "city": "Sukot", "blood_group": "A+"}
    )
    session = service.login("donor1@test.com", "s3cretpw")
    assert session.roles == frozenset({RoleKind.DONOR})
    assert session.expires_at == service.clock.now() + service.token_ttl


def test_login_wrong_password(service):
    service.register("Donor1", "donor1@test.com", "s3cretpw")
    with pytest.raises(InvalidCredentials):
        service.login("donor1@test.com", "wrong-password")


def test_login_unknown_email_is_indistinguishable(service):
    service.register("Donor1", "donor1@test.com", "s3cretpw")
    try:
        service.login("donor1@test.com", "wrong-password")
    except InvalidCredentials as exc:
        wrong_pw = (exc.code, str(exc))
    try:
        service.login("nobody@test.com", "whatever1")
    except InvalidCredentials as exc:
        unknown = (exc.code, str(exc))
    assert wrong_pw == unknown


# -- authorize ---------------------------------------------------------------------


def test_authorize_matrix(service, clock):
    uid = service.register("Donor1", "donor1@test.com", "s3cretpw")
    service.store.upsert_role(
        uid, RoleKind.DONOR, {"phone": "12345", "city": "Sukot", "blood_group": "A+"}
    )
    session = service.login("donor1@test.com", "s3cretpw")

    assert service.authorize(session.token, RoleKind.DONOR).reason == "OK"
    assert service.authorize(session.token, RoleKind.ADMIN).reason == "ROLE_MISSING"
    assert service.authorize(None, RoleKind.DONOR).reason == "NO_TOKEN"
    assert service.authorize("bogus", RoleKind.DONOR).reason == "NO_TOKEN"

    clock.advance(hours=25)
    assert service.authorize(session.token, RoleKind.DONOR).reason == "EXPIRED"


def test_authorize_allowed_iff_ok(service):
    uid = service.register("Donor1", "donor1@test.com", "s3cretpw")
    session = service.login("donor1@test.com", "s3cretpw")
    for required in (None, RoleKind.DONOR, RoleKind.ADMIN):
        decision = service.authorize(session.token, required)
        assert decision.allowed == (decision.reason == "OK")


def test_refresh_roles_updates_live_sessions(service):
    uid = service.register("Donor1", "donor1@test.com", "s3cretpw")
    session = service.login("donor1@test.com", "s3cretpw")
    assert not service.authorize(session.token, RoleKind.DONOR).allowed
    service.store.upsert_role(
        uid, RoleKind.DONOR, {"phone": "12345", "city": "Sukot", "blood_group": "A+"}
    )
    service.refresh_roles(uid)
    assert service.authorize(session.token, RoleKind.DONOR).allowed
