"""Donor visibility: status flags and the 90-day post-donation cooldown."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, timedelta
from enum import Enum

from .blood import BloodGroup

# "Three months" is realized as a fixed 90-day interval so the boundary is
# deterministic regardless of which months the interval spans.
COOLDOWN_DAYS = 90


class DonorStatus(str, Enum):
    ACTIVE = "ACTIVE"
    INACTIVE = "INACTIVE"


@dataclass(frozen=True)
class DonorRecord:
    """A donor as matching sees them.

    `status` is the admin-controlled flag; `available` is the donor's own
    willingness flag. The two are independent.
    """

    donor_id: int
    user_id: int
    phone: str
    city: str
    blood_group: BloodGroup
    status: DonorStatus = DonorStatus.ACTIVE
    available: bool = True
    last_donation_date: date | None = None


def next_eligible_date(last_donation: date) -> date:
    """First day the donor may donate again and reappears in matching."""
    return last_donation + timedelta(days=COOLDOWN_DAYS)


def is_visible(donor: DonorRecord, now: date) -> bool:
    """Whether a donor may appear in patient-facing match results.

    Requires ACTIVE status, the availability flag, and an elapsed cooldown:
    a donor is hidden from the donation day (inclusive) until 90 days later
    (exclusive), reappearing exactly on donation + 90 days.
    """
    if donor.status is not DonorStatus.ACTIVE or not donor.available:
        return False
    if donor.last_donation_date is None:
        return True
    return now >= next_eligible_date(donor.last_donation_date)
