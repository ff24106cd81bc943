"""Required-field and shape checks shared by registration and profile forms."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

# local@domain.tld, no whitespace, exactly one '@', dotted domain
_EMAIL_RE = re.compile(r"^[^@\s]+@[^@\s]+\.[^@\s]+$")
_PHONE_RE = re.compile(r"^[0-9+\- ]+$")

PHONE_MIN_LEN = 5
PHONE_MAX_LEN = 20


@dataclass
class ValidationReport:
    missing_fields: list[str] = field(default_factory=list)
    malformed_fields: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing_fields and not self.malformed_fields

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "missing_fields": list(self.missing_fields),
            "malformed_fields": [list(pair) for pair in self.malformed_fields],
        }


def validate_required(fields: Mapping[str, str]) -> ValidationReport:
    """Report empty and malformed values; never raises.

    A value is missing when it is empty after trimming whitespace (a
    blank-looking field is indistinguishable from an empty one to a user).
    Shape rules apply by field name: 'email' must look like
    local@domain.tld; 'phone' must be 5-20 characters drawn from digits,
    '+', '-', and space.
    """
    report = ValidationReport()
    for name, raw in fields.items():
        value = (raw or "").strip()
        if not value:
            report.missing_fields.append(name)
            continue
        if name == "email" and not _EMAIL_RE.match(value):
            report.malformed_fields.append((name, "expected local@domain.tld"))
        elif name == "phone":
            if not (PHONE_MIN_LEN <= len(value) <= PHONE_MAX_LEN):
                report.malformed_fields.append(
                    (name, f"length must be {PHONE_MIN_LEN}-{PHONE_MAX_LEN}")
                )
            elif not _PHONE_RE.match(value):
                report.malformed_fields.append(
                    (name, "allowed characters: digits, +, -, space")
                )
    return report
