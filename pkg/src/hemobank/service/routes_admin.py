"""Admin donor management: list with filters, add, edit, delete.

Admins see every donor, including cooldown-hidden and inactive ones; each
row carries the computed visible_now flag instead.
"""

from __future__ import annotations

import secrets

from fastapi import APIRouter, Query, Request, Response

from ..auth import Session, ValidationFailed
from ..domain import BloodGroup, validate_required
from ..storage import RoleKind
from .deps import require_role
from .errors import ApiError
from .schemas import (
    AdminDonorCreateIn,
    AdminDonorCreateOut,
    AdminDonorItemOut,
    AdminDonorPageOut,
    AdminDonorUpdateIn,
)
from .views import donor_profile_payload

router = APIRouter(tags=["admin"])

MAX_LIMIT = 100


def _item(state, joined) -> dict:
    return donor_profile_payload(joined, state.clock.today())


@router.get("/admin/donors", response_model=AdminDonorPageOut)
def list_donors(
    request: Request,
    blood_group: str | None = Query(default=None),
    q: str | None = Query(default=None),
    offset: int = Query(default=0),
    limit: int = Query(default=50),
    session: Session = require_role(RoleKind.ADMIN),
):
    state = request.app.state
    if not (1 <= limit <= MAX_LIMIT):
        raise ApiError(422, "VALIDATION_FAILED", f"limit must be in [1, {MAX_LIMIT}]")
    if offset < 0:
        raise ApiError(422, "VALIDATION_FAILED", "offset must be >= 0")
    group = BloodGroup.parse(blood_group) if blood_group else None
    rows, total = state.store.find_donors(blood_group=group, search=q, offset=offset, limit=limit)
    return {"items": [_item(state, r) for r in rows], "total": total}


@router.post("/admin/donors", status_code=201, response_model=AdminDonorCreateOut)
def add_donor(
    body: AdminDonorCreateIn, request: Request, session: Session = require_role(RoleKind.ADMIN)
):
    state = request.app.state
    report = validate_required(
        {
            "name": body.name,
            "email": body.email,
            "phone": body.phone,
            "city": body.city,
            "blood_group": body.blood_group,
        }
    )
    if not report.ok:
        raise ValidationFailed(report)
    group = BloodGroup.parse(body.blood_group)
    # The admin creates the account, so the donor gets a generated password;
    # it is returned exactly once and never stored in the clear.
    temp_password = secrets.token_urlsafe(9)
    user, donor = state.store.create_donor_account(
        body.name.strip(),
        body.email.strip(),
        state.auth.hasher.hash(temp_password),
        {
            "phone": body.phone,
            "city": body.city,
            "blood_group": group,
            "status": body.status,
            "available": body.available,
        },
    )
    return {"user_id": user.user_id, "donor_id": donor.donor_id, "temp_password": temp_password}


@router.put("/admin/donors/{donor_id}", response_model=AdminDonorItemOut)
def update_donor(
    donor_id: int,
    body: AdminDonorUpdateIn,
    request: Request,
    session: Session = require_role(RoleKind.ADMIN),
):
    state = request.app.state
    donor = state.store.get_donor(donor_id)
    if donor is None:
        raise ApiError(404, "UNKNOWN_DONOR", f"no donor {donor_id}")
    payload = {k: v for k, v in body.model_dump().items() if v is not None}
    provided = {k: payload[k] for k in ("phone", "city") if k in payload}
    if provided:
        report = validate_required(provided)
        if not report.ok:
            raise ValidationFailed(report)
    if "blood_group" in payload:
        payload["blood_group"] = BloodGroup.parse(payload["blood_group"])
    if payload:
        state.store.upsert_role(donor.user_id, RoleKind.DONOR, payload)
    joined = next(d for d in state.store.list_all_donors() if d.donor.donor_id == donor_id)
    return _item(state, joined)


@router.delete("/admin/donors/{donor_id}", status_code=204)
def delete_donor(
    donor_id: int, request: Request, session: Session = require_role(RoleKind.ADMIN)
):
    state = request.app.state
    donor = state.store.get_donor(donor_id)
    if donor is None:
        raise ApiError(404, "UNKNOWN_DONOR", f"no donor {donor_id}")
    state.store.delete_donor(donor_id)
    # The deleted role must stop authorizing immediately on live sessions.
    state.auth.refresh_roles(donor.user_id)
    return Response(status_code=204)
