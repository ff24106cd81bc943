"""The repository contract both backends implement, plus shared validators.

Every operation runs as its own atomic unit; multi-write operations
(`record_donation`, `create_donor_account`) commit all their effects or
none. Implementations must be safe for concurrent use from many request
handler threads.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from datetime import date, datetime
from typing import Any, Callable

from ..domain import BloodGroup, DonorStatus
from . import errors
from .rows import (
    AdminRow,
    BloodRequestRow,
    ConversationSummary,
    DonationRow,
    DonorRow,
    DonorWithUser,
    MessageRow,
    NotificationRow,
    PatientRow,
    RequestStatus,
    REQUEST_TRANSITIONS,
    RoleKind,
    UserRow,
)

SCHEMA_VERSION = 1

MAX_NAME_LEN = 100
MAX_EMAIL_LEN = 100
MAX_CITY_LEN = 100
MAX_BODY_LEN = 2000
MAX_PAYLOAD_LEN = 500
MAX_PAGE_LIMIT = 100

NowFn = Callable[[], datetime]


def normalize_email(email: str) -> str:
    """Emails are unique case-insensitively; this is the comparison key."""
    return email.strip().lower()


def check_user_fields(name: str, email: str) -> None:
    if not name or not email:
        raise errors.InvalidRolePayload("name and email must be non-empty")
    if len(name) > MAX_NAME_LEN:
        raise errors.FieldTooLong(f"name exceeds {MAX_NAME_LEN} characters")
    if len(email) > MAX_EMAIL_LEN:
        raise errors.FieldTooLong(f"email exceeds {MAX_EMAIL_LEN} characters")


def coerce_blood_group(value: Any) -> BloodGroup:
    if isinstance(value, BloodGroup):
        return value
    return BloodGroup.parse(value)


def coerce_donor_status(value: Any) -> DonorStatus:
    if isinstance(value, DonorStatus):
        return value
    try:
        return DonorStatus(value)
    except ValueError:
        raise errors.InvalidRolePayload(f"unknown donor status: {value!r}") from None


def check_transition(current: RequestStatus, new: RequestStatus) -> None:
    if new not in REQUEST_TRANSITIONS[current]:
        raise errors.IllegalRequestState(f"cannot move request from {current.value} to {new.value}")


def check_city(city: str) -> str:
    city = (city or "").strip()
    if not city:
        raise errors.InvalidRolePayload("city must be non-empty")
    if len(city) > MAX_CITY_LEN:
        raise errors.FieldTooLong(f"city exceeds {MAX_CITY_LEN} characters")
    return city


def check_message_body(body: str) -> str:
    if not (body or "").strip():
        raise errors.EmptyBody("message body is empty")
    if len(body) > MAX_BODY_LEN:
        raise errors.BodyTooLong(f"message body exceeds {MAX_BODY_LEN} characters")
    return body


_DONOR_PAYLOAD_KEYS = {"phone", "city", "blood_group", "status", "available", "last_donation_date"}
_PATIENT_PAYLOAD_KEYS = {"phone", "city"}


def validate_role_payload(kind: RoleKind, payload: dict, *, creating: bool) -> dict:
    """Normalize an upsert payload; on create, required keys must be present."""
    payload = dict(payload or {})
    if kind is RoleKind.ADMIN:
        if payload:
            raise errors.InvalidRolePayload("admin role carries no payload")
        return {}

    allowed = _DONOR_PAYLOAD_KEYS if kind is RoleKind.DONOR else _PATIENT_PAYLOAD_KEYS
    unknown = set(payload) - allowed
    if unknown:
        raise errors.InvalidRolePayload(f"unknown payload keys: {sorted(unknown)}")

    out: dict = {}
    if "phone" in payload:
        phone = (payload["phone"] or "").strip()
        if not phone:
            raise errors.InvalidRolePayload("phone must be non-empty")
        out["phone"] = phone
    if "city" in payload:
        out["city"] = check_city(payload["city"])
    if kind is RoleKind.DONOR:
        if "blood_group" in payload:
            out["blood_group"] = coerce_blood_group(payload["blood_group"])
        if "status" in payload:
            out["status"] = coerce_donor_status(payload["status"])
        if "available" in payload:
            out["available"] = bool(payload["available"])
        if "last_donation_date" in payload:
            value = payload["last_donation_date"]
            if value is not None and not isinstance(value, date):
                value = date.fromisoformat(value)
            out["last_donation_date"] = value

    if creating:
        required = {"phone", "city", "blood_group"} if kind is RoleKind.DONOR else {"phone", "city"}
        missing = required - set(out)
        if missing:
            raise errors.InvalidRolePayload(f"missing payload keys: {sorted(missing)}")
    return out


class Store(ABC):
    """Repositories for users, roles, requests, donations, messages, notifications."""

    # -- schema ------------------------------------------------------------

    @abstractmethod
    def migrate(self) -> int:
        """Create the schema if needed; idempotent. Refuses unknown versions."""

    @abstractmethod
    def schema_version(self) -> int | None:
        """Current schema version, or None for an unmigrated store."""

    # -- users -------------------------------------------------------------

    @abstractmethod
    def insert_user(self, name: str, email: str, password_hash: str) -> UserRow: ...

    @abstractmethod
    def get_user(self, user_id: int) -> UserRow | None: ...

    @abstractmethod
    def get_user_by_email(self, email: str) -> UserRow | None: ...

    # -- roles ---------------------------------------------------------------

    @abstractmethod
    def upsert_role(self, user_id: int, kind: RoleKind, payload: dict) -> DonorRow | PatientRow | AdminRow:
        """Create the role row if absent, else merge payload; role_id is preserved."""

    @abstractmethod
    def roles_of(self, user_id: int) -> set[RoleKind]: ...

    @abstractmethod
    def get_donor(self, donor_id: int) -> DonorRow | None: ...

    @abstractmethod
    def get_donor_by_user(self, user_id: int) -> DonorRow | None: ...

    @abstractmethod
    def get_patient(self, patient_id: int) -> PatientRow | None: ...

    @abstractmethod
    def get_patient_by_user(self, user_id: int) -> PatientRow | None: ...

    @abstractmethod
    def find_donors(
        self,
        blood_group: BloodGroup | None = None,
        search: str | None = None,
        offset: int = 0,
        limit: int = 50,
    ) -> tuple[list[DonorWithUser], int]:
        """Filtered, donor_id-ordered page plus the total match count.

        `search` matches case-insensitively as a substring of name, phone,
        email, or city.
        """

    @abstractmethod
    def list_all_donors(self) -> list[DonorWithUser]: ...

    @abstractmethod
    def delete_donor(self, donor_id: int) -> None:
        """Remove the donor role; the user account and donation history remain."""

    @abstractmethod
    def create_donor_account(
        self, name: str, email: str, password_hash: str, payload: dict
    ) -> tuple[UserRow, DonorRow]:
        """User plus donor role in one atomic unit (admin add-donor flow)."""

    # -- blood requests ------------------------------------------------------

    @abstractmethod
    def insert_request(
        self, patient_id: int, blood_group: BloodGroup, quantity_units: int, city: str
    ) -> BloodRequestRow: ...

    @abstractmethod
    def get_request(self, request_id: int) -> BloodRequestRow | None: ...

    @abstractmethod
    def set_request_status(self, request_id: int, status: RequestStatus) -> BloodRequestRow:
        """Apply a lifecycle transition; illegal moves raise IllegalRequestState."""

    @abstractmethod
    def list_requests_by_patient(self, patient_id: int) -> list[BloodRequestRow]: ...

    # -- donations -------------------------------------------------------------

    @abstractmethod
    def record_donation(
        self,
        donor_id: int,
        donated_on: date,
        today: date,
        request_id: int | None = None,
    ) -> DonationRow:
        """Insert the donation and update the donor's cooldown clock atomically.

        If `request_id` points at a MATCHED request it becomes FULFILLED in
        the same unit. `today` is the caller's clock; future dates refuse.
        """

    @abstractmethod
    def list_donations_by_donor(self, donor_id: int) -> list[DonationRow]: ...

    # -- messages ---------------------------------------------------------------

    @abstractmethod
    def insert_message(self, sender_user_id: int, recipient_user_id: int, body: str) -> MessageRow: ...

    @abstractmethod
    def list_conversation(
        self, user_a: int, user_b: int, offset: int = 0, limit: int = 50
    ) -> list[MessageRow]:
        """The two-party thread ordered by sent_at then message_id, ascending."""

    @abstractmethod
    def mark_messages_read(self, message_ids: list[int]) -> None: ...

    @abstractmethod
    def list_conversation_partners(self, user_id: int) -> list[ConversationSummary]: ...

    # -- notifications -------------------------------------------------------------

    @abstractmethod
    def insert_notification(
        self,
        user_id: int,
        kind,
        payload: str,
        dedupe_key: str | None = None,
    ) -> NotificationRow | None:
        """Insert unless `dedupe_key` already exists; None means deduplicated."""

    @abstractmethod
    def list_notifications(self, user_id: int) -> list[NotificationRow]:
        """Own notifications, newest first."""

    @abstractmethod
    def mark_notification_read(self, notification_id: int, user_id: int) -> NotificationRow:
        """Idempotent; unknown or foreign ids raise UnknownNotification."""

    # -- lifecycle ------------------------------------------------------------------

    def close(self) -> None:
        pass
