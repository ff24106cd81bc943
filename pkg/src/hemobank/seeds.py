"""Demo data profiles.

The `fig6` profile loads the two donors shown on the admin donor page plus
one demo patient and one admin, the minimum cast needed to exercise every
role. Seeding is idempotent by email: existing accounts are left alone.
"""

from __future__ import annotations

import secrets

from .auth import PasswordHasher
from .domain import BloodGroup, DonorStatus
from .storage import RoleKind, Store

SEED_PROFILES = ("none", "fig6")

FIG6_DONORS = [
    {
        "name": "Donor1",
        "email": "donor1@test.com",
        "phone": "0987654321",
        "city": "Sukot",
        "blood_group": BloodGroup.A_POS,
    },
    {
        "name": "Donor2",
        "email": "donor2@test.com",
        "phone": "0123456789",
        "city": "Guprenwala",
        "blood_group": BloodGroup.A_NEG,
    },
]

FIG6_PATIENT = {
    "name": "Patient1",
    "email": "patient1@test.com",
    "phone": "0321654987",
    "city": "Sukot",
}

FIG6_ADMIN = {"name": "Admin", "email": "admin@test.com"}


def seed_profile(store: Store, profile: str, hasher: PasswordHasher) -> dict[str, str]:
    """Load a named profile; returns {email: generated password} for new accounts."""
    if profile not in SEED_PROFILES:
        raise ValueError(f"unknown seed profile: {profile!r}")
    if profile == "none":
        return {}

    created: dict[str, str] = {}

    def new_user(name: str, email: str) -> int | None:
        if store.get_user_by_email(email) is not None:
            return None
        password = secrets.token_urlsafe(9)
        user = store.insert_user(name, email, hasher.hash(password))
        created[email] = password
        return user.user_id

    for donor in FIG6_DONORS:
        user_id = new_user(donor["name"], donor["email"])
        if user_id is not None:
            store.upsert_role(
                user_id,
                RoleKind.DONOR,
                {
                    "phone": donor["phone"],
                    "city": donor["city"],
                    "blood_group": donor["blood_group"],
                    "status": DonorStatus.ACTIVE,
                    "available": True,
                },
            )

    user_id = new_user(FIG6_PATIENT["name"], FIG6_PATIENT["email"])
    if user_id is not None:
        store.upsert_role(
            user_id,
            RoleKind.PATIENT,
            {"phone": FIG6_PATIENT["phone"], "city": FIG6_PATIENT["city"]},
        )

    user_id = new_user(FIG6_ADMIN["name"], FIG6_ADMIN["email"])
    if user_id is not None:
        store.upsert_role(user_id, RoleKind.ADMIN, {})

    return created
