"""Blood requests, donor matching, and donation recording."""

from __future__ import annotations

from fastapi import APIRouter, Request

from ..auth import Session, ValidationFailed
from ..domain import BloodGroup, MatchQuery, match_donors, normalize_city, validate_required
from ..storage import NotificationKind, RequestStatus, RoleKind
from .deps import require_role, require_session
from .errors import ApiError
from .schemas import BloodRequestIn, BloodRequestOut, DonationIn, DonationOut, MatchItemOut

router = APIRouter(tags=["requests"])


def _request_payload(row) -> dict:
    return {
        "request_id": row.request_id,
        "patient_id": row.patient_id,
        "blood_group": row.blood_group.value,
        "quantity_units": row.quantity_units,
        "city": row.city,
        "status": row.status.value,
        "created_at": row.created_at,
    }


@router.post("/requests", status_code=201, response_model=BloodRequestOut)
def create_request(
    body: BloodRequestIn, request: Request, session: Session = require_role(RoleKind.PATIENT)
):
    state = request.app.state
    report = validate_required({"blood_group": body.blood_group, "city": body.city})
    if body.quantity_units < 1:
        report.malformed_fields.append(("quantity_units", "must be >= 1"))
    if not report.ok:
        raise ValidationFailed(report)
    group = BloodGroup.parse(body.blood_group)
    patient = state.store.get_patient_by_user(session.user_id)
    row = state.store.insert_request(patient.patient_id, group, body.quantity_units, body.city)
    return _request_payload(row)


def _notify_status(state, req, status: RequestStatus) -> None:
    patient = state.store.get_patient(req.patient_id)
    state.store.insert_notification(
        patient.user_id,
        NotificationKind.REQUEST_STATUS,
        f"Your blood request #{req.request_id} ({req.blood_group.value}) is now {status.value}.",
        dedupe_key=f"request-status:{req.request_id}:{status.value}",
    )


@router.get("/requests/{request_id}/matches", response_model=list[MatchItemOut])
def list_matches(request_id: int, request: Request):
    session = require_session(request)
    state = request.app.state
    req = state.store.get_request(request_id)
    if req is None:
        raise ApiError(404, "UNKNOWN_REQUEST", f"no request {request_id}")

    if RoleKind.ADMIN not in session.roles:
        patient = state.store.get_patient_by_user(session.user_id)
        if patient is None or patient.patient_id != req.patient_id:
            raise ApiError(403, "NOT_OWNER", "only the requesting patient or an admin may view matches")

    donors = state.store.list_all_donors()
    by_id = {d.donor.donor_id: d for d in donors}
    query = MatchQuery(blood_group=req.blood_group, city=req.city, now=state.clock.today())
    matched = match_donors(query, [d.donor.to_record() for d in donors])

    if matched and req.status is RequestStatus.OPEN:
        state.store.set_request_status(req.request_id, RequestStatus.MATCHED)
        _notify_status(state, req, RequestStatus.MATCHED)

    items = []
    for record in matched:
        joined = by_id[record.donor_id]
        # The store deduplicates on (request, donor), so repeated calls never
        # stack up notifications for the same match.
        state.store.insert_notification(
            record.user_id,
            NotificationKind.MATCH_FOUND,
            f"A patient in {req.city} needs {req.blood_group.value} blood"
            f" (request #{req.request_id}). Your profile matches.",
            dedupe_key=f"match-found:{req.request_id}:{record.donor_id}",
        )
        items.append(
            {
                "donor_id": record.donor_id,
                "user_id": record.user_id,
                "name": joined.name,
                "phone": record.phone,
                "city": record.city,
                "blood_group": record.blood_group.value,
                "city_match": normalize_city(record.city) == normalize_city(req.city),
                "exact_group": record.blood_group is req.blood_group,
            }
        )
    return items


@router.post("/donations", status_code=201, response_model=DonationOut)
def record_donation(body: DonationIn, request: Request):
    session = require_session(request)
    state = request.app.state

    if RoleKind.ADMIN not in session.roles:
        own = state.store.get_donor_by_user(session.user_id)
        if own is None:
            raise ApiError(403, "ROLE_MISSING", "requires the DONOR or ADMIN role")
        if own.donor_id != body.donor_id:
            raise ApiError(403, "NOT_OWNER", "donors may only record their own donations")

    row = state.store.record_donation(
        body.donor_id, body.donated_on, today=state.clock.today(), request_id=body.request_id
    )
    if body.request_id is not None:
        req = state.store.get_request(body.request_id)
        if req is not None and req.status is RequestStatus.FULFILLED:
            _notify_status(state, req, RequestStatus.FULFILLED)
    return {
        "donation_id": row.donation_id,
        "donor_id": row.donor_id,
        "donated_on": row.donated_on,
        "request_id": row.request_id,
    }
