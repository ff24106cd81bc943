"""Builders that turn store rows into response payloads."""

from __future__ import annotations

from datetime import date

from ..domain import is_visible, next_eligible_date
from ..storage import DonorWithUser


def donor_profile_payload(joined: DonorWithUser, today: date) -> dict:
    donor = joined.donor
    record = donor.to_record()
    return {
        "donor_id": donor.donor_id,
        "user_id": donor.user_id,
        "name": joined.name,
        "email": joined.email,
        "phone": donor.phone,
        "city": donor.city,
        "blood_group": donor.blood_group.value,
        "status": donor.status.value,
        "available": donor.available,
        "last_donation_date": donor.last_donation_date,
        "next_eligible_date": (
            next_eligible_date(donor.last_donation_date) if donor.last_donation_date else None
        ),
        "visible_now": is_visible(record, today),
    }
