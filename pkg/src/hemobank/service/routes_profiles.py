"""Donor and patient profiles.

POST enrolls the caller into the role (any authenticated user may become a
donor or patient); GET and PUT require the role. Registration alone grants
no role, so enrollment is the step that turns an account into an actor.
"""

from __future__ import annotations

from fastapi import APIRouter, Request, Response

from ..auth import Session, ValidationFailed
from ..domain import validate_required
from ..storage import RoleKind
from .deps import require_role, require_session
from .errors import ApiError
from .schemas import (
    DonorEnrollIn,
    DonorProfileOut,
    DonorProfileUpdateIn,
    PatientEnrollIn,
    PatientProfileOut,
    PatientProfileUpdateIn,
)
from .views import donor_profile_payload

router = APIRouter(tags=["profiles"])


def _donor_payload_of(session: Session, request: Request) -> dict:
    state = request.app.state
    joined = next(
        (d for d in state.store.list_all_donors() if d.donor.user_id == session.user_id), None
    )
    if joined is None:
        raise ApiError(404, "UNKNOWN_DONOR", "no donor profile for this account")
    return donor_profile_payload(joined, state.clock.today())


@router.post("/donor/profile", response_model=DonorProfileOut, status_code=200)
def enroll_donor(body: DonorEnrollIn, request: Request, response: Response):
    session = require_session(request)
    state = request.app.state
    creating = state.store.get_donor_by_user(session.user_id) is None
    report = validate_required(
        {"phone": body.phone, "city": body.city, "blood_group": body.blood_group}
    )
    if not report.ok:
        raise ValidationFailed(report)
    state.store.upsert_role(
        session.user_id,
        RoleKind.DONOR,
        {
            "phone": body.phone,
            "city": body.city,
            "blood_group": body.blood_group,
            "available": body.available,
        },
    )
    state.auth.refresh_roles(session.user_id)
    if creating:
        response.status_code = 201
    return _donor_payload_of(session, request)


@router.get("/donor/profile", response_model=DonorProfileOut)
def get_donor_profile(request: Request, session: Session = require_role(RoleKind.DONOR)):
    return _donor_payload_of(session, request)


@router.put("/donor/profile", response_model=DonorProfileOut)
def update_donor_profile(
    body: DonorProfileUpdateIn, request: Request, session: Session = require_role(RoleKind.DONOR)
):
    state = request.app.state
    payload = {k: v for k, v in body.model_dump().items() if v is not None}
    provided = {k: payload[k] for k in ("phone", "city") if k in payload}
    if provided:
        report = validate_required(provided)
        if not report.ok:
            raise ValidationFailed(report)
    if payload:
        state.store.upsert_role(session.user_id, RoleKind.DONOR, payload)
    return _donor_payload_of(session, request)


def _patient_payload_of(session: Session, request: Request) -> dict:
    state = request.app.state
    patient = state.store.get_patient_by_user(session.user_id)
    if patient is None:
        raise ApiError(404, "UNKNOWN_PATIENT", "no patient profile for this account")
    user = state.store.get_user(session.user_id)
    return {
        "patient_id": patient.patient_id,
        "user_id": patient.user_id,
        "name": user.name,
        "email": user.email,
        "phone": patient.phone,
        "city": patient.city,
    }


@router.post("/patient/profile", response_model=PatientProfileOut, status_code=200)
def enroll_patient(body: PatientEnrollIn, request: Request, response: Response):
    session = require_session(request)
    state = request.app.state
    creating = state.store.get_patient_by_user(session.user_id) is None
    report = validate_required({"phone": body.phone, "city": body.city})
    if not report.ok:
        raise ValidationFailed(report)
    state.store.upsert_role(
        session.user_id, RoleKind.PATIENT, {"phone": body.phone, "city": body.city}
    )
    state.auth.refresh_roles(session.user_id)
    if creating:
        response.status_code = 201
    return _patient_payload_of(session, request)


@router.get("/patient/profile", response_model=PatientProfileOut)
def get_patient_profile(request: Request, session: Session = require_role(RoleKind.PATIENT)):
    return _patient_payload_of(session, request)


@router.put("/patient/profile", response_model=PatientProfileOut)
def update_patient_profile(
    body: PatientProfileUpdateIn,
    request: Request,
    session: Session = require_role(RoleKind.PATIENT),
):
    state = request.app.state
    payload = {k: v for k, v in body.model_dump().items() if v is not None}
    if payload:
        report = validate_required(payload)
        if not report.ok:
            raise ValidationFailed(report)
        state.store.upsert_role(session.user_id, RoleKind.PATIENT, payload)
    return _patient_payload_of(session, request)
