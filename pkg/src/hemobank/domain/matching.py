"""Request-to-donor matching and its deterministic ranking."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date

from .blood import BloodGroup, is_compatible
from .eligibility import DonorRecord, is_visible


def normalize_city(city: str) -> str:
    """Cities compare case-insensitively after trimming surrounding whitespace."""
    return city.strip().casefold()


@dataclass(frozen=True)
class MatchQuery:
    blood_group: BloodGroup  # the recipient's group
    city: str
    now: date


def match_donors(query: MatchQuery, donors: list[DonorRecord]) -> list[DonorRecord]:
    """Visible, compatible donors ranked for the recipient.

    Ranking: same city first; exact blood group before merely compatible
    (keeps rare groups for the recipients who need them); never-donated
    before longest-ago donation before recent (spreads donation load);
    ascending donor_id last. donor_id is unique, so the order is total.

    City is a ranking signal, not a filter: compatible donors in other
    cities still appear, ranked lower. Pure function; `donors` is not
    mutated.
    """
    wanted_city = normalize_city(query.city)
    eligible = [
        d
        for d in donors
        if is_visible(d, query.now) and is_compatible(d.blood_group, query.blood_group)
    ]

    def rank(d: DonorRecord):
        return (
            normalize_city(d.city) != wanted_city,
            d.blood_group != query.blood_group,
            d.last_donation_date is not None,
            d.last_donation_date or date.min,
            d.donor_id,
        )

    return sorted(eligible, key=rank)
