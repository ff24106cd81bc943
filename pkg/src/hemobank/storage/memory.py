"""Dict-backed store for tests and ephemeral demo runs.

A single re-entrant lock serializes every operation, which makes each call
atomic. `record_donation` keeps explicit undo state so an injected fault
between its writes leaves either all effects or none.
"""

from __future__ import annotations

import itertools
import threading
from datetime import date, datetime, timezone

from ..domain import BloodGroup, DonorStatus
from . import errors
from .base import (
    MAX_PAGE_LIMIT,
    MAX_PAYLOAD_LEN,
    SCHEMA_VERSION,
    NowFn,
    Store,
    check_message_body,
    check_city,
    check_transition,
    check_user_fields,
    coerce_blood_group,
    normalize_email,
    validate_role_payload,
)
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
    RoleKind,
    UserRow,
)


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class InMemoryStore(Store):
    def __init__(self, now_fn: NowFn | None = None):
        self._now = now_fn or _utcnow
        self._lock = threading.RLock()
        self._version: int | None = None

        self._users: dict[int, UserRow] = {}
        self._email_index: dict[str, int] = {}
        self._donors: dict[int, DonorRow] = {}
        self._patients: dict[int, PatientRow] = {}
        self._admins: dict[int, AdminRow] = {}
        self._requests: dict[int, BloodRequestRow] = {}
        self._donations: dict[int, DonationRow] = {}
        self._messages: dict[int, MessageRow] = {}
        self._notifications: dict[int, NotificationRow] = {}
        self._dedupe_index: dict[str, int] = {}

        self._ids = {
            name: itertools.count(1)
            for name in (
                "users",
                "donors",
                "patients",
                "admins",
                "requests",
                "donations",
                "messages",
                "notifications",
            )
        }

    # -- schema ------------------------------------------------------------

    def migrate(self) -> int:
        with self._lock:
            self._version = SCHEMA_VERSION
            return self._version

    def schema_version(self) -> int | None:
        return self._version

    # -- users -------------------------------------------------------------

    def insert_user(self, name: str, email: str, password_hash: str) -> UserRow:
        with self._lock:
            check_user_fields(name, email)
            key = normalize_email(email)
            if key in self._email_index:
                raise errors.DuplicateEmail(f"email already registered: {email}")
            row = UserRow(
                user_id=next(self._ids["users"]),
                name=name,
                email=email,
                password_hash=password_hash,
                created_at=self._now(),
            )
            self._users[row.user_id] = row
            self._email_index[key] = row.user_id
            return row

    def get_user(self, user_id: int) -> UserRow | None:
        return self._users.get(user_id)

    def get_user_by_email(self, email: str) -> UserRow | None:
        user_id = self._email_index.get(normalize_email(email))
        return self._users.get(user_id) if user_id is not None else None

    # -- roles ---------------------------------------------------------------

    def upsert_role(self, user_id: int, kind: RoleKind, payload: dict):
        with self._lock:
            if user_id not in self._users:
                raise errors.UnknownUser(f"no user {user_id}")
            if kind is RoleKind.DONOR:
                existing = self.get_donor_by_user(user_id)
                clean = validate_role_payload(kind, payload, creating=existing is None)
                if existing is None:
                    row = DonorRow(
                        donor_id=next(self._ids["donors"]),
                        user_id=user_id,
                        phone=clean["phone"],
                        city=clean["city"],
                        blood_group=clean["blood_group"],
                        status=clean.get("status", DonorStatus.ACTIVE),
                        available=clean.get("available", True),
                        last_donation_date=clean.get("last_donation_date"),
                    )
                else:
                    merged = existing.__dict__ | clean
                    row = DonorRow(**merged)
                self._donors[row.donor_id] = row
                return row
            if kind is RoleKind.PATIENT:
                existing = self.get_patient_by_user(user_id)
                clean = validate_role_payload(kind, payload, creating=existing is None)
                if existing is None:
                    row = PatientRow(
                        patient_id=next(self._ids["patients"]),
                        user_id=user_id,
                        phone=clean["phone"],
                        city=clean["city"],
                    )
                else:
                    row = PatientRow(**(existing.__dict__ | clean))
                self._patients[row.patient_id] = row
                return row
            validate_role_payload(kind, payload, creating=True)
            existing = next((a for a in self._admins.values() if a.user_id == user_id), None)
            if existing is None:
                existing = AdminRow(admin_id=next(self._ids["admins"]), user_id=user_id)
                self._admins[existing.admin_id] = existing
            return existing

    def roles_of(self, user_id: int) -> set[RoleKind]:
        with self._lock:
            roles = set()
            if self.get_donor_by_user(user_id):
                roles.add(RoleKind.DONOR)
            if self.get_patient_by_user(user_id):
                roles.add(RoleKind.PATIENT)
            if any(a.user_id == user_id for a in self._admins.values()):
                roles.add(RoleKind.ADMIN)
            return roles

    def get_donor(self, donor_id: int) -> DonorRow | None:
        return self._donors.get(donor_id)

    def get_donor_by_user(self, user_id: int) -> DonorRow | None:
        with self._lock:
            return next((d for d in self._donors.values() if d.user_id == user_id), None)

    def get_patient(self, patient_id: int) -> PatientRow | None:
        return self._patients.get(patient_id)

    def get_patient_by_user(self, user_id: int) -> PatientRow | None:
        with self._lock:
            return next((p for p in self._patients.values() if p.user_id == user_id), None)

    def _joined(self, donor: DonorRow) -> DonorWithUser:
        user = self._users[donor.user_id]
        return DonorWithUser(donor=donor, name=user.name, email=user.email)

    def find_donors(
        self,
        blood_group: BloodGroup | None = None,
        search: str | None = None,
        offset: int = 0,
        limit: int = 50,
    ) -> tuple[list[DonorWithUser], int]:
        if not (1 <= limit <= MAX_PAGE_LIMIT):
            raise ValueError(f"limit must be in [1, {MAX_PAGE_LIMIT}]")
        if offset < 0:
            raise ValueError("offset must be >= 0")
        if blood_group is not None:
            blood_group = coerce_blood_group(blood_group)
        with self._lock:
            rows = [self._joined(d) for d in self._donors.values()]
        if blood_group is not None:
            rows = [r for r in rows if r.donor.blood_group is blood_group]
        if search:
            needle = search.lower()
            rows = [
                r
                for r in rows
                if needle in r.name.lower()
                or needle in r.donor.phone.lower()
                or needle in r.email.lower()
                or needle in r.donor.city.lower()
            ]
        rows.sort(key=lambda r: r.donor.donor_id)
        return rows[offset : offset + limit], len(rows)

    def list_all_donors(self) -> list[DonorWithUser]:
        with self._lock:
            rows = [self._joined(d) for d in self._donors.values()]
        rows.sort(key=lambda r: r.donor.donor_id)
        return rows

    def delete_donor(self, donor_id: int) -> None:
        with self._lock:
            if donor_id not in self._donors:
                raise errors.UnknownDonor(f"no donor {donor_id}")
            del self._donors[donor_id]

    def create_donor_account(self, name, email, password_hash, payload):
        with self._lock:
            clean = validate_role_payload(RoleKind.DONOR, payload, creating=True)
            user = self.insert_user(name, email, password_hash)
            try:
                donor = DonorRow(
                    donor_id=next(self._ids["donors"]),
                    user_id=user.user_id,
                    phone=clean["phone"],
                    city=clean["city"],
                    blood_group=clean["blood_group"],
                    status=clean.get("status", DonorStatus.ACTIVE),
                    available=clean.get("available", True),
                    last_donation_date=clean.get("last_donation_date"),
                )
                self._donors[donor.donor_id] = donor
            except BaseException:
                del self._users[user.user_id]
                del self._email_index[normalize_email(email)]
                raise
            return user, donor

    # -- blood requests ------------------------------------------------------

    def insert_request(self, patient_id, blood_group, quantity_units, city):
        with self._lock:
            if patient_id not in self._patients:
                raise errors.UnknownPatient(f"no patient {patient_id}")
            if quantity_units < 1:
                raise errors.InvalidQuantity("quantity_units must be >= 1")
            row = BloodRequestRow(
                request_id=next(self._ids["requests"]),
                patient_id=patient_id,
                blood_group=coerce_blood_group(blood_group),
                quantity_units=quantity_units,
                city=check_city(city),
                status=RequestStatus.OPEN,
                created_at=self._now(),
            )
            self._requests[row.request_id] = row
            return row

    def get_request(self, request_id: int) -> BloodRequestRow | None:
        return self._requests.get(request_id)

    def set_request_status(self, request_id: int, status: RequestStatus) -> BloodRequestRow:
        with self._lock:
            row = self._requests.get(request_id)
            if row is None:
                raise errors.UnknownRequest(f"no request {request_id}")
            check_transition(row.status, status)
            self._write_request_status(request_id, status)
            return self._requests[request_id]

    def list_requests_by_patient(self, patient_id: int) -> list[BloodRequestRow]:
        with self._lock:
            rows = [r for r in self._requests.values() if r.patient_id == patient_id]
        rows.sort(key=lambda r: r.request_id)
        return rows

    # -- donations -------------------------------------------------------------

    def record_donation(self, donor_id, donated_on, today, request_id=None):
        with self._lock:
            donor = self._donors.get(donor_id)
            if donor is None:
                raise errors.UnknownDonor(f"no donor {donor_id}")
            if donated_on > today:
                raise errors.FutureDate(f"donated_on {donated_on} is after today {today}")
            request = None
            if request_id is not None:
                request = self._requests.get(request_id)
                if request is None:
                    raise errors.UnknownRequest(f"no request {request_id}")
                if request.status not in (RequestStatus.OPEN, RequestStatus.MATCHED):
                    raise errors.IllegalRequestState(
                        f"request {request_id} is {request.status.value}"
                    )

            # All validation done; apply the writes with undo on failure so
            # a crash mid-operation cannot leave a half-applied donation.
            prev_donor = donor
            prev_request = request
            row = None
            try:
                row = self._write_donation_row(donor_id, donated_on, request_id)
                self._write_donor_cooldown(donor_id, donated_on)
                if request is not None and request.status is RequestStatus.MATCHED:
                    self._write_request_status(request_id, RequestStatus.FULFILLED)
            except BaseException:
                if row is not None:
                    self._donations.pop(row.donation_id, None)
                self._donors[donor_id] = prev_donor
                if prev_request is not None:
                    self._requests[prev_request.request_id] = prev_request
                raise
            return row

    def _write_donation_row(self, donor_id, donated_on, request_id) -> DonationRow:
        row = DonationRow(
            donation_id=next(self._ids["donations"]),
            donor_id=donor_id,
            request_id=request_id,
            donated_on=donated_on,
        )
        self._donations[row.donation_id] = row
        return row

    def _write_donor_cooldown(self, donor_id: int, donated_on: date) -> None:
        donor = self._donors[donor_id]
        self._donors[donor_id] = DonorRow(**(donor.__dict__ | {"last_donation_date": donated_on}))

    def _write_request_status(self, request_id: int, status: RequestStatus) -> None:
        row = self._requests[request_id]
        self._requests[request_id] = BloodRequestRow(**(row.__dict__ | {"status": status}))

    def list_donations_by_donor(self, donor_id: int) -> list[DonationRow]:
        with self._lock:
            rows = [d for d in self._donations.values() if d.donor_id == donor_id]
        rows.sort(key=lambda d: d.donation_id)
        return rows

    # -- messages ---------------------------------------------------------------

    def insert_message(self, sender_user_id, recipient_user_id, body):
        with self._lock:
            if sender_user_id not in self._users:
                raise errors.UnknownUser(f"no user {sender_user_id}")
            if recipient_user_id not in self._users:
                raise errors.UnknownRecipient(f"no user {recipient_user_id}")
            if sender_user_id == recipient_user_id:
                raise errors.SelfMessage("sender and recipient are the same user")
            body = check_message_body(body)
            row = MessageRow(
                message_id=next(self._ids["messages"]),
                sender_user_id=sender_user_id,
                recipient_user_id=recipient_user_id,
                body=body,
                sent_at=self._now(),
                read=False,
            )
            self._messages[row.message_id] = row
            return row

    def list_conversation(self, user_a, user_b, offset=0, limit=50):
        if not (1 <= limit <= MAX_PAGE_LIMIT):
            raise ValueError(f"limit must be in [1, {MAX_PAGE_LIMIT}]")
        pair = {user_a, user_b}
        with self._lock:
            rows = [
                m
                for m in self._messages.values()
                if {m.sender_user_id, m.recipient_user_id} == pair
            ]
        rows.sort(key=lambda m: (m.sent_at, m.message_id))
        return rows[offset : offset + limit]

    def mark_messages_read(self, message_ids):
        with self._lock:
            for mid in message_ids:
                row = self._messages.get(mid)
                if row is not None and not row.read:
                    self._messages[mid] = MessageRow(**(row.__dict__ | {"read": True}))

    def list_conversation_partners(self, user_id: int) -> list[ConversationSummary]:
        with self._lock:
            partners: dict[int, list[MessageRow]] = {}
            for m in self._messages.values():
                if m.sender_user_id == user_id:
                    partners.setdefault(m.recipient_user_id, []).append(m)
                elif m.recipient_user_id == user_id:
                    partners.setdefault(m.sender_user_id, []).append(m)
            out = []
            for partner_id, msgs in partners.items():
                user = self._users.get(partner_id)
                if user is None:
                    continue
                out.append(
                    ConversationSummary(
                        user_id=partner_id,
                        name=user.name,
                        last_message_at=max(m.sent_at for m in msgs),
                        unread_count=sum(
                            1 for m in msgs if m.recipient_user_id == user_id and not m.read
                        ),
                    )
                )
            out.sort(key=lambda c: c.last_message_at, reverse=True)
            return out

    # -- notifications -------------------------------------------------------------

    def insert_notification(self, user_id, kind, payload, dedupe_key=None):
        with self._lock:
            if user_id not in self._users:
                raise errors.UnknownUser(f"no user {user_id}")
            if len(payload) > MAX_PAYLOAD_LEN:
                raise errors.PayloadTooLong(f"payload exceeds {MAX_PAYLOAD_LEN} characters")
            kind = NotificationKind(kind)
            if dedupe_key is not None and dedupe_key in self._dedupe_index:
                return None
            row = NotificationRow(
                notification_id=next(self._ids["notifications"]),
                user_id=user_id,
                kind=kind,
                payload=payload,
                created_at=self._now(),
                read=False,
            )
            self._notifications[row.notification_id] = row
            if dedupe_key is not None:
                self._dedupe_index[dedupe_key] = row.notification_id
            return row

    def list_notifications(self, user_id: int) -> list[NotificationRow]:
        with self._lock:
            rows = [n for n in self._notifications.values() if n.user_id == user_id]
        rows.sort(key=lambda n: (n.created_at, n.notification_id), reverse=True)
        return rows

    def mark_notification_read(self, notification_id: int, user_id: int) -> NotificationRow:
        with self._lock:
            row = self._notifications.get(notification_id)
            if row is None or row.user_id != user_id:
                raise errors.UnknownNotification(f"no notification {notification_id}")
            if not row.read:
                row = NotificationRow(**(row.__dict__ | {"read": True}))
                self._notifications[notification_id] = row
            return row
