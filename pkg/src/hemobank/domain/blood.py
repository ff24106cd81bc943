"""Blood group algebra: the eight ABO/RhD groups and transfusion compatibility.

A group is modelled by the set of red-cell antigens it carries (A, B, RhD).
Donor blood is acceptable for a recipient exactly when it introduces no
antigen the recipient lacks, i.e. the donor's antigen set is a subset of
the recipient's.
"""

from __future__ import annotations

from enum import Enum


class Antigen(str, Enum):
    A = "A"
    B = "B"
    RHD = "RhD"


class InvalidBloodGroup(ValueError):
    """Raised when a string is not one of the eight group symbols."""

    code = "INVALID_BLOOD_GROUP"

    def __init__(self, value: object):
        super().__init__(f"unknown blood group: {value!r}")
        self.value = value


class BloodGroup(str, Enum):
    A_POS = "A+"
    A_NEG = "A-"
    B_POS = "B+"
    B_NEG = "B-"
    AB_POS = "AB+"
    AB_NEG = "AB-"
    O_POS = "O+"
    O_NEG = "O-"

    @classmethod
    def parse(cls, value: str) -> "BloodGroup":
        """Strict parse of one of the eight symbols; no normalization."""
        try:
            return cls(value)
        except ValueError:
            raise InvalidBloodGroup(value) from None

    def render(self) -> str:
        return self.value

    def __str__(self) -> str:
        return self.value


def _antigens(group: BloodGroup) -> frozenset[Antigen]:
    abo, sign = group.value[:-1], group.value[-1]
    carried = set()
    if "A" in abo:
        carried.add(Antigen.A)
    if "B" in abo:
        carried.add(Antigen.B)
    if sign == "+":
        carried.add(Antigen.RHD)
    return frozenset(carried)


_ANTIGEN_TABLE: dict[BloodGroup, frozenset[Antigen]] = {g: _antigens(g) for g in BloodGroup}


def antigens_of(group: BloodGroup) -> frozenset[Antigen]:
    """Antigens carried by a group: its ABO letters, plus RhD for a '+' sign."""
    return _ANTIGEN_TABLE[group]


def is_compatible(donor: BloodGroup, recipient: BloodGroup) -> bool:
    """True iff the donor's antigens are a subset of the recipient's."""
    return antigens_of(donor) <= antigens_of(recipient)


def compatible_donor_groups(recipient: BloodGroup) -> set[BloodGroup]:
    """All groups whose blood the recipient can accept."""
    return {d for d in BloodGroup if is_compatible(d, recipient)}
