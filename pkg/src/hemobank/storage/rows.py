"""Row shapes returned by the stores."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime
from enum import Enum

from ..domain import BloodGroup, DonorRecord, DonorStatus


class RoleKind(str, Enum):
    DONOR = "DONOR"
    PATIENT = "PATIENT"
    ADMIN = "ADMIN"


class RequestStatus(str, Enum):
    OPEN = "OPEN"
    MATCHED = "MATCHED"
    FULFILLED = "FULFILLED"
    CANCELLED = "CANCELLED"


# Legal lifecycle moves; FULFILLED and CANCELLED are terminal.
REQUEST_TRANSITIONS: dict[RequestStatus, set[RequestStatus]] = {
    RequestStatus.OPEN: {RequestStatus.MATCHED, RequestStatus.CANCELLED},
    RequestStatus.MATCHED: {RequestStatus.FULFILLED, RequestStatus.CANCELLED},
    RequestStatus.FULFILLED: set(),
    RequestStatus.CANCELLED: set(),
}


class NotificationKind(str, Enum):
    MATCH_FOUND = "MATCH_FOUND"
    REQUEST_STATUS = "REQUEST_STATUS"
    ADMIN_NOTICE = "ADMIN_NOTICE"


@dataclass(frozen=True)
class UserRow:
    user_id: int
    name: str
    email: str
    password_hash: str
    created_at: datetime


@dataclass(frozen=True)
class DonorRow:
    donor_id: int
    user_id: int
    phone: str
    city: str
    blood_group: BloodGroup
    status: DonorStatus
    available: bool
    last_donation_date: date | None

    def to_record(self) -> DonorRecord:
        return DonorRecord(
            donor_id=self.donor_id,
            user_id=self.user_id,
            phone=self.phone,
            city=self.city,
            blood_group=self.blood_group,
            status=self.status,
            available=self.available,
            last_donation_date=self.last_donation_date,
        )


@dataclass(frozen=True)
class PatientRow:
    patient_id: int
    user_id: int
    phone: str
    city: str


@dataclass(frozen=True)
class AdminRow:
    admin_id: int
    user_id: int


@dataclass(frozen=True)
class DonorWithUser:
    """A donor row joined with its user's display fields."""

    donor: DonorRow
    name: str
    email: str


@dataclass(frozen=True)
class BloodRequestRow:
    request_id: int
    patient_id: int
    blood_group: BloodGroup
    quantity_units: int
    city: str
    status: RequestStatus
    created_at: datetime


@dataclass(frozen=True)
class DonationRow:
    donation_id: int
    donor_id: int
    request_id: int | None
    donated_on: date


@dataclass(frozen=True)
class MessageRow:
    message_id: int
    sender_user_id: int
    recipient_user_id: int
    body: str
    sent_at: datetime
    read: bool


@dataclass(frozen=True)
class NotificationRow:
    notification_id: int
    user_id: int
    kind: NotificationKind
    payload: str
    created_at: datetime
    read: bool


@dataclass(frozen=True)
class ConversationSummary:
    user_id: int
    name: str
    last_message_at: datetime
    unread_count: int
