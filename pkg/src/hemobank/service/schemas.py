"""Request and response models for the JSON API.

Free-text inputs default to empty strings instead of being required at the
schema level: the field-validation rules own the error reporting, so a
missing name yields a VALIDATION_FAILED report rather than a schema error.
"""

from __future__ import annotations

from datetime import date, datetime

from pydantic import BaseModel


class RegisterIn(BaseModel):
    name: str = ""
    email: str = ""
    password: str = ""


class RegisterOut(BaseModel):
    user_id: int


class LoginIn(BaseModel):
    email: str = ""
    password: str = ""


class LoginOut(BaseModel):
    token: str
    expires_at: datetime
    roles: list[str]


class DonorEnrollIn(BaseModel):
    phone: str = ""
    city: str = ""
    blood_group: str = ""
    available: bool = True


class DonorProfileUpdateIn(BaseModel):
    phone: str | None = None
    city: str | None = None
    blood_group: str | None = None
    available: bool | None = None


class DonorProfileOut(BaseModel):
    donor_id: int
    user_id: int
    name: str
    email: str
    phone: str
    city: str
    blood_group: str
    status: str
    available: bool
    last_donation_date: date | None
    next_eligible_date: date | None
    visible_now: bool


class PatientEnrollIn(BaseModel):
    phone: str = ""
    city: str = ""


class PatientProfileUpdateIn(BaseModel):
    phone: str | None = None
    city: str | None = None


class PatientProfileOut(BaseModel):
    patient_id: int
    user_id: int
    name: str
    email: str
    phone: str
    city: str


class BloodRequestIn(BaseModel):
    blood_group: str = ""
    quantity_units: int = 0
    city: str = ""


class BloodRequestOut(BaseModel):
    request_id: int
    patient_id: int
    blood_group: str
    quantity_units: int
    city: str
    status: str
    created_at: datetime


class MatchItemOut(BaseModel):
    donor_id: int
    user_id: int
    name: str
    phone: str
    city: str
    blood_group: str
    city_match: bool
    exact_group: bool


class DonationIn(BaseModel):
    donor_id: int = 0
    donated_on: date
    request_id: int | None = None


class DonationOut(BaseModel):
    donation_id: int
    donor_id: int
    donated_on: date
    request_id: int | None


class AdminDonorCreateIn(BaseModel):
    name: str = ""
    email: str = ""
    phone: str = ""
    city: str = ""
    blood_group: str = ""
    status: str = "ACTIVE"
    available: bool = True


class AdminDonorCreateOut(BaseModel):
    user_id: int
    donor_id: int
    temp_password: str


class AdminDonorUpdateIn(BaseModel):
    phone: str | None = None
    city: str | None = None
    blood_group: str | None = None
    status: str | None = None
    available: bool | None = None


class AdminDonorItemOut(BaseModel):
    donor_id: int
    user_id: int
    name: str
    phone: str
    email: str
    city: str
    blood_group: str
    status: str
    available: bool
    last_donation_date: date | None
    next_eligible_date: date | None
    visible_now: bool


class AdminDonorPageOut(BaseModel):
    items: list[AdminDonorItemOut]
    total: int


class MessageIn(BaseModel):
    recipient_user_id: int = 0
    body: str = ""


class MessageOut(BaseModel):
    message_id: int
    sender_user_id: int
    recipient_user_id: int
    body: str
    sent_at: datetime
    read: bool


class ConversationOut(BaseModel):
    user_id: int
    name: str
    last_message_at: datetime
    unread_count: int


class NotificationOut(BaseModel):
    notification_id: int
    kind: str
    payload: str
    created_at: datetime
    read: bool
