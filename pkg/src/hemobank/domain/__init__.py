"""Pure, storage-free domain logic.

Everything here is a pure function over immutable inputs: no clock reads,
no I/O, safe to call concurrently.
"""

from .blood import (
    Antigen,
    BloodGroup,
    InvalidBloodGroup,
    antigens_of,
    compatible_donor_groups,
    is_compatible,
)
from .eligibility import (
    COOLDOWN_DAYS,
    DonorRecord,
    DonorStatus,
    is_visible,
    next_eligible_date,
)
from .matching import MatchQuery, match_donors, normalize_city
from .validation import ValidationReport, validate_required

__all__ = [
    "Antigen",
    "BloodGroup",
    "InvalidBloodGroup",
    "antigens_of",
    "compatible_donor_groups",
    "is_compatible",
    "COOLDOWN_DAYS",
    "DonorRecord",
    "DonorStatus",
    "is_visible",
    "next_eligible_date",
    "MatchQuery",
    "match_donors",
    "normalize_city",
    "ValidationReport",
    "validate_required",
]
