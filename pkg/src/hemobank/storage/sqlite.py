"""Durable SQLite store.

One connection guarded by a re-entrant lock; every operation runs inside a
single transaction (`with self._conn`), so multi-write operations roll back
as a unit on any failure. Dates are stored as ISO text, timestamps as
RFC-3339 UTC text.
"""

from __future__ import annotations

import sqlite3
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

_TABLES = ("users", "donors", "patients", "admins", "blood_requests", "donations", "messages", "notifications")

_SCHEMA = """
CREATE TABLE schema_version (
    version INTEGER NOT NULL
);
CREATE TABLE users (
    user_id INTEGER PRIMARY KEY AUTOINCREMENT,
    name TEXT NOT NULL,
    email TEXT NOT NULL UNIQUE COLLATE NOCASE,
    password_hash TEXT NOT NULL,
    created_at TEXT NOT NULL
);
CREATE TABLE donors (
    donor_id INTEGER PRIMARY KEY AUTOINCREMENT,
    user_id INTEGER NOT NULL UNIQUE REFERENCES users(user_id),
    phone TEXT NOT NULL,
    city TEXT NOT NULL,
    blood_group TEXT NOT NULL,
    status TEXT NOT NULL DEFAULT 'ACTIVE',
    available INTEGER NOT NULL DEFAULT 1,
    last_donation_date TEXT
);
CREATE TABLE patients (
    patient_id INTEGER PRIMARY KEY AUTOINCREMENT,
    user_id INTEGER NOT NULL UNIQUE REFERENCES users(user_id),
    phone TEXT NOT NULL,
    city TEXT NOT NULL
);
CREATE TABLE admins (
    admin_id INTEGER PRIMARY KEY AUTOINCREMENT,
    user_id INTEGER NOT NULL UNIQUE REFERENCES users(user_id)
);
CREATE TABLE blood_requests (
    request_id INTEGER PRIMARY KEY AUTOINCREMENT,
    patient_id INTEGER NOT NULL REFERENCES patients(patient_id),
    blood_group TEXT NOT NULL,
    quantity_units INTEGER NOT NULL CHECK (quantity_units >= 1),
    city TEXT NOT NULL,
    status TEXT NOT NULL DEFAULT 'OPEN',
    created_at TEXT NOT NULL
);
-- donor_id has no foreign key on purpose: deleting a donor keeps a
-- tombstone id here for audit.
CREATE TABLE donations (
    donation_id INTEGER PRIMARY KEY AUTOINCREMENT,
    donor_id INTEGER NOT NULL,
    request_id INTEGER REFERENCES blood_requests(request_id),
    donated_on TEXT NOT NULL
);
CREATE TABLE messages (
    message_id INTEGER PRIMARY KEY AUTOINCREMENT,
    sender_user_id INTEGER NOT NULL REFERENCES users(user_id),
    recipient_user_id INTEGER NOT NULL REFERENCES users(user_id),
    body TEXT NOT NULL,
    sent_at TEXT NOT NULL,
    read INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE notifications (
    notification_id INTEGER PRIMARY KEY AUTOINCREMENT,
    user_id INTEGER NOT NULL REFERENCES users(user_id),
    kind TEXT NOT NULL,
    payload TEXT NOT NULL,
    created_at TEXT NOT NULL,
    read INTEGER NOT NULL DEFAULT 0,
    dedupe_key TEXT UNIQUE
);
"""


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


def _iso(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).isoformat()


def _parse_dt(text: str) -> datetime:
    return datetime.fromisoformat(text)


def _parse_date(text: str | None) -> date | None:
    return date.fromisoformat(text) if text else None


def _like_escape(needle: str) -> str:
    return needle.replace("\\", "\\\\").replace("%", "\\%").replace("_", "\\_")


class SqliteStore(Store):
    def __init__(self, path: str, now_fn: NowFn | None = None):
        self._now = now_fn or _utcnow
        self._lock = threading.RLock()
        try:
            self._conn = sqlite3.connect(path, check_same_thread=False)
        except sqlite3.Error as exc:
            raise errors.StoreUnreachable(f"cannot open {path}: {exc}") from exc
        self._conn.row_factory = sqlite3.Row
        self._conn.execute("PRAGMA foreign_keys = ON")

    def close(self) -> None:
        self._conn.close()

    # -- schema ------------------------------------------------------------

    def _existing_tables(self) -> set[str]:
        cur = self._conn.execute("SELECT name FROM sqlite_master WHERE type = 'table'")
        return {row["name"] for row in cur.fetchall()}

    def schema_version(self) -> int | None:
        with self._lock:
            if "schema_version" not in self._existing_tables():
                return None
            row = self._conn.execute("SELECT version FROM schema_version").fetchone()
            return row["version"] if row else None

    def migrate(self) -> int:
        with self._lock:
            tables = self._existing_tables()
            if "schema_version" in tables:
                version = self.schema_version()
                if version != SCHEMA_VERSION:
                    raise errors.MigrationError(
                        f"store is at unsupported schema version {version}"
                    )
                return version
            if any(t in tables for t in _TABLES):
                raise errors.MigrationError(
                    "store has tables but no schema_version; refusing to guess"
                )
            with self._conn:
                self._conn.executescript(_SCHEMA)
                self._conn.execute("INSERT INTO schema_version (version) VALUES (?)", (SCHEMA_VERSION,))
            return SCHEMA_VERSION

    # -- users -------------------------------------------------------------

    def insert_user(self, name: str, email: str, password_hash: str) -> UserRow:
        with self._lock:
            check_user_fields(name, email)
            created_at = self._now()
            try:
                with self._conn:
                    cur = self._conn.execute(
                        "INSERT INTO users (name, email, password_hash, created_at) VALUES (?, ?, ?, ?)",
                        (name, email, password_hash, _iso(created_at)),
                    )
            except sqlite3.IntegrityError as exc:
                raise errors.DuplicateEmail(f"email already registered: {email}") from exc
            return UserRow(cur.lastrowid, name, email, password_hash, created_at)

    def _user_from(self, row: sqlite3.Row | None) -> UserRow | None:
        if row is None:
            return None
        return UserRow(
            user_id=row["user_id"],
            name=row["name"],
            email=row["email"],
            password_hash=row["password_hash"],
            created_at=_parse_dt(row["created_at"]),
        )

    def get_user(self, user_id: int) -> UserRow | None:
        with self._lock:
            row = self._conn.execute("SELECT * FROM users WHERE user_id = ?", (user_id,)).fetchone()
        return self._user_from(row)

    def get_user_by_email(self, email: str) -> UserRow | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM users WHERE email = ? COLLATE NOCASE", (email.strip(),)
            ).fetchone()
        return self._user_from(row)

    # -- roles ---------------------------------------------------------------

    def _donor_from(self, row: sqlite3.Row | None) -> DonorRow | None:
        if row is None:
            return None
        return DonorRow(
            donor_id=row["donor_id"],
            user_id=row["user_id"],
            phone=row["phone"],
            city=row["city"],
            blood_group=BloodGroup(row["blood_group"]),
            status=DonorStatus(row["status"]),
            available=bool(row["available"]),
            last_donation_date=_parse_date(row["last_donation_date"]),
        )

    def _require_user(self, user_id: int) -> None:
        row = self._conn.execute("SELECT 1 FROM users WHERE user_id = ?", (user_id,)).fetchone()
        if row is None:
            raise errors.UnknownUser(f"no user {user_id}")

    def upsert_role(self, user_id: int, kind: RoleKind, payload: dict):
        with self._lock:
            self._require_user(user_id)
            if kind is RoleKind.DONOR:
                existing = self.get_donor_by_user(user_id)
                clean = validate_role_payload(kind, payload, creating=existing is None)
                with self._conn:
                    if existing is None:
                        cur = self._conn.execute(
                            "INSERT INTO donors (user_id, phone, city, blood_group, status, available, last_donation_date)"
                            " VALUES (?, ?, ?, ?, ?, ?, ?)",
                            (
                                user_id,
                                clean["phone"],
                                clean["city"],
                                clean["blood_group"].value,
                                clean.get("status", DonorStatus.ACTIVE).value,
                                int(clean.get("available", True)),
                                clean.get("last_donation_date").isoformat()
                                if clean.get("last_donation_date")
                                else None,
                            ),
                        )
                        return self.get_donor(cur.lastrowid)
                    merged = existing.__dict__ | clean
                    self._conn.execute(
                        "UPDATE donors SET phone = ?, city = ?, blood_group = ?, status = ?,"
                        " available = ?, last_donation_date = ? WHERE donor_id = ?",
                        (
                            merged["phone"],
                            merged["city"],
                            merged["blood_group"].value,
                            merged["status"].value,
                            int(merged["available"]),
                            merged["last_donation_date"].isoformat()
                            if merged["last_donation_date"]
                            else None,
                            existing.donor_id,
                        ),
                    )
                return self.get_donor(existing.donor_id)
            if kind is RoleKind.PATIENT:
                existing = self.get_patient_by_user(user_id)
                clean = validate_role_payload(kind, payload, creating=existing is None)
                with self._conn:
                    if existing is None:
                        cur = self._conn.execute(
                            "INSERT INTO patients (user_id, phone, city) VALUES (?, ?, ?)",
                            (user_id, clean["phone"], clean["city"]),
                        )
                        return self.get_patient(cur.lastrowid)
                    merged = existing.__dict__ | clean
                    self._conn.execute(
                        "UPDATE patients SET phone = ?, city = ? WHERE patient_id = ?",
                        (merged["phone"], merged["city"], existing.patient_id),
                    )
                return self.get_patient(existing.patient_id)
            validate_role_payload(kind, payload, creating=True)
            row = self._conn.execute(
                "SELECT * FROM admins WHERE user_id = ?", (user_id,)
            ).fetchone()
            if row is not None:
                return AdminRow(admin_id=row["admin_id"], user_id=user_id)
            with self._conn:
                cur = self._conn.execute("INSERT INTO admins (user_id) VALUES (?)", (user_id,))
            return AdminRow(admin_id=cur.lastrowid, user_id=user_id)

    def roles_of(self, user_id: int) -> set[RoleKind]:
        with self._lock:
            roles = set()
            for kind, table in (
                (RoleKind.DONOR, "donors"),
                (RoleKind.PATIENT, "patients"),
                (RoleKind.ADMIN, "admins"),
            ):
                if self._conn.execute(f"SELECT 1 FROM {table} WHERE user_id = ?", (user_id,)).fetchone():
                    roles.add(kind)
            return roles

    def get_donor(self, donor_id: int) -> DonorRow | None:
        with self._lock:
            row = self._conn.execute("SELECT * FROM donors WHERE donor_id = ?", (donor_id,)).fetchone()
        return self._donor_from(row)

    def get_donor_by_user(self, user_id: int) -> DonorRow | None:
        with self._lock:
            row = self._conn.execute("SELECT * FROM donors WHERE user_id = ?", (user_id,)).fetchone()
        return self._donor_from(row)

    def get_patient(self, patient_id: int) -> PatientRow | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM patients WHERE patient_id = ?", (patient_id,)
            ).fetchone()
        if row is None:
            return None
        return PatientRow(row["patient_id"], row["user_id"], row["phone"], row["city"])

    def get_patient_by_user(self, user_id: int) -> PatientRow | None:
        with self._lock:
            row = self._conn.execute("SELECT * FROM patients WHERE user_id = ?", (user_id,)).fetchone()
        if row is None:
            return None
        return PatientRow(row["patient_id"], row["user_id"], row["phone"], row["city"])

    def _joined_from(self, row: sqlite3.Row) -> DonorWithUser:
        return DonorWithUser(donor=self._donor_from(row), name=row["name"], email=row["email"])

    def find_donors(self, blood_group=None, search=None, offset=0, limit=50):
        if not (1 <= limit <= MAX_PAGE_LIMIT):
            raise ValueError(f"limit must be in [1, {MAX_PAGE_LIMIT}]")
        if offset < 0:
            raise ValueError("offset must be >= 0")
        where, params = [], []
        if blood_group is not None:
            where.append("d.blood_group = ?")
            params.append(coerce_blood_group(blood_group).value)
        if search:
            needle = f"%{_like_escape(search.lower())}%"
            where.append(
                "(lower(u.name) LIKE ? ESCAPE '\\' OR lower(d.phone) LIKE ? ESCAPE '\\'"
                " OR lower(u.email) LIKE ? ESCAPE '\\' OR lower(d.city) LIKE ? ESCAPE '\\')"
            )
            params.extend([needle] * 4)
        clause = f" WHERE {' AND '.join(where)}" if where else ""
        base = f"FROM donors d JOIN users u ON u.user_id = d.user_id{clause}"
        with self._lock:
            total = self._conn.execute(f"SELECT COUNT(*) AS n {base}", params).fetchone()["n"]
            rows = self._conn.execute(
                f"SELECT d.*, u.name, u.email {base} ORDER BY d.donor_id LIMIT ? OFFSET ?",
                (*params, limit, offset),
            ).fetchall()
        return [self._joined_from(r) for r in rows], total

    def list_all_donors(self) -> list[DonorWithUser]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT d.*, u.name, u.email FROM donors d JOIN users u ON u.user_id = d.user_id"
                " ORDER BY d.donor_id"
            ).fetchall()
        return [self._joined_from(r) for r in rows]

    def delete_donor(self, donor_id: int) -> None:
        with self._lock:
            with self._conn:
                cur = self._conn.execute("DELETE FROM donors WHERE donor_id = ?", (donor_id,))
            if cur.rowcount == 0:
                raise errors.UnknownDonor(f"no donor {donor_id}")

    def create_donor_account(self, name, email, password_hash, payload):
        with self._lock:
            check_user_fields(name, email)
            clean = validate_role_payload(RoleKind.DONOR, payload, creating=True)
            created_at = self._now()
            try:
                with self._conn:
                    cur = self._conn.execute(
                        "INSERT INTO users (name, email, password_hash, created_at) VALUES (?, ?, ?, ?)",
                        (name, email, password_hash, _iso(created_at)),
                    )
                    user_id = cur.lastrowid
                    cur = self._conn.execute(
                        "INSERT INTO donors (user_id, phone, city, blood_group, status, available, last_donation_date)"
                        " VALUES (?, ?, ?, ?, ?, ?, ?)",
                        (
                            user_id,
                            clean["phone"],
                            clean["city"],
                            clean["blood_group"].value,
                            clean.get("status", DonorStatus.ACTIVE).value,
                            int(clean.get("available", True)),
                            None,
                        ),
                    )
                    donor_id = cur.lastrowid
            except sqlite3.IntegrityError as exc:
                raise errors.DuplicateEmail(f"email already registered: {email}") from exc
            user = UserRow(user_id, name, email, password_hash, created_at)
            return user, self.get_donor(donor_id)

    # -- blood requests ------------------------------------------------------

    def _request_from(self, row: sqlite3.Row | None) -> BloodRequestRow | None:
        if row is None:
            return None
        return BloodRequestRow(
            request_id=row["request_id"],
            patient_id=row["patient_id"],
            blood_group=BloodGroup(row["blood_group"]),
            quantity_units=row["quantity_units"],
            city=row["city"],
            status=RequestStatus(row["status"]),
            created_at=_parse_dt(row["created_at"]),
        )

    def insert_request(self, patient_id, blood_group, quantity_units, city):
        with self._lock:
            if self.get_patient(patient_id) is None:
                raise errors.UnknownPatient(f"no patient {patient_id}")
            if quantity_units < 1:
                raise errors.InvalidQuantity("quantity_units must be >= 1")
            created_at = self._now()
            with self._conn:
                cur = self._conn.execute(
                    "INSERT INTO blood_requests (patient_id, blood_group, quantity_units, city, status, created_at)"
                    " VALUES (?, ?, ?, ?, ?, ?)",
                    (
                        patient_id,
                        coerce_blood_group(blood_group).value,
                        quantity_units,
                        check_city(city),
                        RequestStatus.OPEN.value,
                        _iso(created_at),
                    ),
                )
            return self.get_request(cur.lastrowid)

    def get_request(self, request_id: int) -> BloodRequestRow | None:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM blood_requests WHERE request_id = ?", (request_id,)
            ).fetchone()
        return self._request_from(row)

    def set_request_status(self, request_id: int, status: RequestStatus) -> BloodRequestRow:
        with self._lock:
            current = self.get_request(request_id)
            if current is None:
                raise errors.UnknownRequest(f"no request {request_id}")
            check_transition(current.status, status)
            with self._conn:
                self._write_request_status(request_id, status)
            return self.get_request(request_id)

    def list_requests_by_patient(self, patient_id: int) -> list[BloodRequestRow]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM blood_requests WHERE patient_id = ? ORDER BY request_id",
                (patient_id,),
            ).fetchall()
        return [self._request_from(r) for r in rows]

    # -- donations -------------------------------------------------------------

    def record_donation(self, donor_id, donated_on, today, request_id=None):
        with self._lock:
            if self.get_donor(donor_id) is None:
                raise errors.UnknownDonor(f"no donor {donor_id}")
            if donated_on > today:
                raise errors.FutureDate(f"donated_on {donated_on} is after today {today}")
            request = None
            if request_id is not None:
                request = self.get_request(request_id)
                if request is None:
                    raise errors.UnknownRequest(f"no request {request_id}")
                if request.status not in (RequestStatus.OPEN, RequestStatus.MATCHED):
                    raise errors.IllegalRequestState(f"request {request_id} is {request.status.value}")
            # One transaction: all three writes commit together or roll back.
            with self._conn:
                donation_id = self._write_donation_row(donor_id, donated_on, request_id)
                self._write_donor_cooldown(donor_id, donated_on)
                if request is not None and request.status is RequestStatus.MATCHED:
                    self._write_request_status(request_id, RequestStatus.FULFILLED)
            return DonationRow(donation_id, donor_id, request_id, donated_on)

    def _write_donation_row(self, donor_id: int, donated_on: date, request_id: int | None) -> int:
        cur = self._conn.execute(
            "INSERT INTO donations (donor_id, request_id, donated_on) VALUES (?, ?, ?)",
            (donor_id, request_id, donated_on.isoformat()),
        )
        return cur.lastrowid

    def _write_donor_cooldown(self, donor_id: int, donated_on: date) -> None:
        self._conn.execute(
            "UPDATE donors SET last_donation_date = ? WHERE donor_id = ?",
            (donated_on.isoformat(), donor_id),
        )

    def _write_request_status(self, request_id: int, status: RequestStatus) -> None:
        self._conn.execute(
            "UPDATE blood_requests SET status = ? WHERE request_id = ?",
            (status.value, request_id),
        )

    def list_donations_by_donor(self, donor_id: int) -> list[DonationRow]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM donations WHERE donor_id = ? ORDER BY donation_id", (donor_id,)
            ).fetchall()
        return [
            DonationRow(r["donation_id"], r["donor_id"], r["request_id"], date.fromisoformat(r["donated_on"]))
            for r in rows
        ]

    # -- messages ---------------------------------------------------------------

    def _message_from(self, row: sqlite3.Row) -> MessageRow:
        return MessageRow(
            message_id=row["message_id"],
            sender_user_id=row["sender_user_id"],
            recipient_user_id=row["recipient_user_id"],
            body=row["body"],
            sent_at=_parse_dt(row["sent_at"]),
            read=bool(row["read"]),
        )

    def insert_message(self, sender_user_id, recipient_user_id, body):
        with self._lock:
            self._require_user(sender_user_id)
            if self._conn.execute(
                "SELECT 1 FROM users WHERE user_id = ?", (recipient_user_id,)
            ).fetchone() is None:
                raise errors.UnknownRecipient(f"no user {recipient_user_id}")
            if sender_user_id == recipient_user_id:
                raise errors.SelfMessage("sender and recipient are the same user")
            body = check_message_body(body)
            sent_at = self._now()
            with self._conn:
                cur = self._conn.execute(
                    "INSERT INTO messages (sender_user_id, recipient_user_id, body, sent_at, read)"
                    " VALUES (?, ?, ?, ?, 0)",
                    (sender_user_id, recipient_user_id, body, _iso(sent_at)),
                )
            return MessageRow(cur.lastrowid, sender_user_id, recipient_user_id, body, sent_at, False)

    def list_conversation(self, user_a, user_b, offset=0, limit=50):
        if not (1 <= limit <= MAX_PAGE_LIMIT):
            raise ValueError(f"limit must be in [1, {MAX_PAGE_LIMIT}]")
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM messages WHERE (sender_user_id = ? AND recipient_user_id = ?)"
                " OR (sender_user_id = ? AND recipient_user_id = ?)"
                " ORDER BY sent_at, message_id LIMIT ? OFFSET ?",
                (user_a, user_b, user_b, user_a, limit, offset),
            ).fetchall()
        return [self._message_from(r) for r in rows]

    def mark_messages_read(self, message_ids):
        if not message_ids:
            return
        marks = ",".join("?" * len(message_ids))
        with self._lock, self._conn:
            self._conn.execute(
                f"UPDATE messages SET read = 1 WHERE message_id IN ({marks})", list(message_ids)
            )

    def list_conversation_partners(self, user_id: int) -> list[ConversationSummary]:
        with self._lock:
            rows = self._conn.execute(
                """
                SELECT partner_id, u.name AS name, MAX(sent_at) AS last_at,
                       SUM(CASE WHEN incoming = 1 AND read = 0 THEN 1 ELSE 0 END) AS unread
                FROM (
                    SELECT recipient_user_id AS partner_id, sent_at, read, 0 AS incoming
                    FROM messages WHERE sender_user_id = :uid
                    UNION ALL
                    SELECT sender_user_id AS partner_id, sent_at, read, 1 AS incoming
                    FROM messages WHERE recipient_user_id = :uid
                )
                JOIN users u ON u.user_id = partner_id
                GROUP BY partner_id, u.name
                ORDER BY last_at DESC
                """,
                {"uid": user_id},
            ).fetchall()
        return [
            ConversationSummary(
                user_id=r["partner_id"],
                name=r["name"],
                last_message_at=_parse_dt(r["last_at"]),
                unread_count=r["unread"],
            )
            for r in rows
        ]

    # -- notifications -------------------------------------------------------------

    def _notification_from(self, row: sqlite3.Row) -> NotificationRow:
        return NotificationRow(
            notification_id=row["notification_id"],
            user_id=row["user_id"],
            kind=NotificationKind(row["kind"]),
            payload=row["payload"],
            created_at=_parse_dt(row["created_at"]),
            read=bool(row["read"]),
        )

    def insert_notification(self, user_id, kind, payload, dedupe_key=None):
        with self._lock:
            self._require_user(user_id)
            if len(payload) > MAX_PAYLOAD_LEN:
                raise errors.PayloadTooLong(f"payload exceeds {MAX_PAYLOAD_LEN} characters")
            kind = NotificationKind(kind)
            created_at = self._now()
            try:
                with self._conn:
                    cur = self._conn.execute(
                        "INSERT INTO notifications (user_id, kind, payload, created_at, read, dedupe_key)"
                        " VALUES (?, ?, ?, ?, 0, ?)",
                        (user_id, kind.value, payload, _iso(created_at), dedupe_key),
                    )
            except sqlite3.IntegrityError:
                return None  # dedupe_key already present
            return NotificationRow(cur.lastrowid, user_id, kind, payload, created_at, False)

    def list_notifications(self, user_id: int) -> list[NotificationRow]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT * FROM notifications WHERE user_id = ?"
                " ORDER BY created_at DESC, notification_id DESC",
                (user_id,),
            ).fetchall()
        return [self._notification_from(r) for r in rows]

    def mark_notification_read(self, notification_id: int, user_id: int) -> NotificationRow:
        with self._lock:
            row = self._conn.execute(
                "SELECT * FROM notifications WHERE notification_id = ?", (notification_id,)
            ).fetchone()
            if row is None or row["user_id"] != user_id:
                raise errors.UnknownNotification(f"no notification {notification_id}")
            with self._conn:
                self._conn.execute(
                    "UPDATE notifications SET read = 1 WHERE notification_id = ?", (notification_id,)
                )
            return self._notification_from(
                self._conn.execute(
                    "SELECT * FROM notifications WHERE notification_id = ?", (notification_id,)
                ).fetchone()
            )
