"""Registration, login, password hashing, and bearer-session authorization.

Passwords are stored as salted PBKDF2-HMAC-SHA256 digests; the work factor
comes from configuration (PASSWORD_HASH_COST). Sessions live in a
server-side table so tokens can be revoked; the token itself is a 256-bit
random value.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import threading
from dataclasses import dataclass
from datetime import datetime, timedelta

from .clock import Clock
from .domain import ValidationReport, validate_required
from .storage import RoleKind, Store

PASSWORD_MIN_LEN = 8
PASSWORD_MAX_LEN = 72
DEFAULT_HASH_ITERATIONS = 100_000
TOKEN_BYTES = 32  # 256 bits
_SALT_BYTES = 16


class AuthError(Exception):
    code = "AUTH_ERROR"

    def __init__(self, message: str | None = None):
        super().__init__(message or self.code.replace("_", " ").lower())


class ValidationFailed(AuthError):
    code = "VALIDATION_FAILED"

    def __init__(self, report: ValidationReport):
        super().__init__("one or more fields are missing or malformed")
        self.report = report


class PasswordPolicyError(AuthError):
    code = "PASSWORD_POLICY"

    def __init__(self):
        super().__init__(
            f"password must be {PASSWORD_MIN_LEN}-{PASSWORD_MAX_LEN} characters"
        )


class InvalidCredentials(AuthError):
    code = "INVALID_CREDENTIALS"

    def __init__(self):
        # One message for unknown email and wrong password alike: the
        # response must not reveal which accounts exist.
        super().__init__("invalid email or password")


class PasswordHasher:
    """PBKDF2-HMAC-SHA256 with a fresh random salt per hash."""

    def __init__(self, iterations: int = DEFAULT_HASH_ITERATIONS):
        if iterations < 1:
            raise ValueError("iterations must be >= 1")
        self.iterations = iterations
        # Verified against when the email is unknown, so both failure paths
        # cost one PBKDF2 evaluation.
        self._decoy = self.hash(secrets.token_hex(8))

    def hash(self, password: str) -> str:
        salt = secrets.token_bytes(_SALT_BYTES)
        digest = hashlib.pbkdf2_hmac("sha256", password.encode(), salt, self.iterations)
        return f"pbkdf2_sha256${self.iterations}${salt.hex()}${digest.hex()}"

    def verify(self, stored: str, password: str) -> bool:
        try:
            scheme, iterations, salt_hex, digest_hex = stored.split("$")
            if scheme != "pbkdf2_sha256":
                return False
            candidate = hashlib.pbkdf2_hmac(
                "sha256", password.encode(), bytes.fromhex(salt_hex), int(iterations)
            )
            return hmac.compare_digest(candidate.hex(), digest_hex)
        except (ValueError, AttributeError):
            return False

    def verify_decoy(self, password: str) -> bool:
        return self.verify(self._decoy, password)


@dataclass(frozen=True)
class Session:
    token: str
    user_id: int
    roles: frozenset[RoleKind]
    expires_at: datetime


@dataclass(frozen=True)
class AuthzDecision:
    allowed: bool
    reason: str  # OK | NO_TOKEN | EXPIRED | ROLE_MISSING
    session: Session | None = None


class SessionStore:
    """In-process session table; creation, lookup, and revocation are atomic."""

    def __init__(self):
        self._lock = threading.Lock()
        self._by_token: dict[str, Session] = {}
        self._by_user: dict[int, set[str]] = {}

    def create(self, user_id: int, roles: set[RoleKind], expires_at: datetime) -> Session:
        session = Session(
            token=secrets.token_urlsafe(TOKEN_BYTES),
            user_id=user_id,
            roles=frozenset(roles),
            expires_at=expires_at,
        )
        with self._lock:
            self._by_token[session.token] = session
            self._by_user.setdefault(user_id, set()).add(session.token)
        return session

    def get(self, token: str) -> Session | None:
        return self._by_token.get(token)

    def revoke(self, token: str) -> None:
        with self._lock:
            session = self._by_token.pop(token, None)
            if session is not None:
                self._by_user.get(session.user_id, set()).discard(token)

    def refresh_roles(self, user_id: int, roles: set[RoleKind]) -> None:
        """Update the role set on every live session of a user.

        Role grants take effect immediately; without this, a user who just
        enrolled as a donor would keep a stale token until re-login.
        """
        with self._lock:
            for token in self._by_user.get(user_id, set()):
                old = self._by_token[token]
                self._by_token[token] = Session(
                    token=old.token,
                    user_id=old.user_id,
                    roles=frozenset(roles),
                    expires_at=old.expires_at,
                )


class AuthService:
    def __init__(
        self,
        store: Store,
        hasher: PasswordHasher,
        sessions: SessionStore,
        clock: Clock,
        token_ttl_hours: int = 24,
    ):
        self.store = store
        self.hasher = hasher
        self.sessions = sessions
        self.clock = clock
        self.token_ttl = timedelta(hours=token_ttl_hours)

    def register(self, name: str, email: str, password: str) -> int:
        """Validate, hash, insert; returns the new user id. No roles attached."""
        report = validate_required({"name": name, "email": email, "password": password})
        if not report.ok:
            raise ValidationFailed(report)
        if not (PASSWORD_MIN_LEN <= len(password) <= PASSWORD_MAX_LEN):
            raise PasswordPolicyError()
        user = self.store.insert_user(name.strip(), email.strip(), self.hasher.hash(password))
        return user.user_id

    def login(self, email: str, password: str) -> Session:
        user = self.store.get_user_by_email(email or "")
        if user is None:
            self.hasher.verify_decoy(password or "")
            raise InvalidCredentials()
        if not self.hasher.verify(user.password_hash, password or ""):
            raise InvalidCredentials()
        roles = self.store.roles_of(user.user_id)
        return self.sessions.create(user.user_id, roles, self.clock.now() + self.token_ttl)

    def authorize(self, token: str | None, required_role: RoleKind | None = None) -> AuthzDecision:
        if not token:
            return AuthzDecision(False, "NO_TOKEN")
        session = self.sessions.get(token)
        if session is None:
            return AuthzDecision(False, "NO_TOKEN")
        if self.clock.now() >= session.expires_at:
            return AuthzDecision(False, "EXPIRED")
        if required_role is not None and required_role not in session.roles:
            return AuthzDecision(False, "ROLE_MISSING", session)
        return AuthzDecision(True, "OK", session)

    def refresh_roles(self, user_id: int) -> None:
        self.sessions.refresh_roles(user_id, self.store.roles_of(user_id))
