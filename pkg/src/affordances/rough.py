"""Rough approximations of object sets relative to a partition.

The upper approximation collects every block that meets the set, the
lower approximation every block contained in it; the boundary is their
difference. Membership in the approximated set is three valued.

All the arithmetic happens on index bitmasks over the table's object
order; ids appear only at the API boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import UnknownObject
from .systems import Partition


class MembershipStatus(Enum):
    CERTAINLY_IN = "CertainlyIn"
    CERTAINLY_OUT = "CertainlyOut"
    POSSIBLY = "Possibly"


@dataclass(frozen=True)
class RoughSet:
    """A pair of approximations with lower contained in upper."""

    lower: frozenset[str]
    upper: frozenset[str]

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError("lower approximation exceeds upper approximation")

    @property
    def boundary(self) -> frozenset[str]:
        return self.upper - self.lower


def _upper_mask(partition: Partition, xmask: int) -> int:
    out = 0
    for bmask in partition.block_masks:
        if bmask & xmask:
            out |= bmask
    return out


def _lower_mask(partition: Partition, xmask: int) -> int:
    out = 0
    for bmask in partition.block_masks:
        if bmask & xmask == bmask:
            out |= bmask
    return out


def upper(partition: Partition, members: Iterable[str]) -> set[str]:
    """Objects whose block meets the set."""
    return partition.ids_of(_upper_mask(partition, partition.mask_of(members)))


def lower(partition: Partition, members: Iterable[str]) -> set[str]:
    """Objects whose block is contained in the set."""
    return partition.ids_of(_lower_mask(partition, partition.mask_of(members)))


def boundary(partition: Partition, members: Iterable[str]) -> set[str]:
    xmask = partition.mask_of(members)
    um = _upper_mask(partition, xmask)
    lm = _lower_mask(partition, xmask)
    return partition.ids_of(um & ~lm)


def approximate(partition: Partition, members: Iterable[str]) -> RoughSet:
    xmask = partition.mask_of(members)
    return RoughSet(
        frozenset(partition.ids_of(_lower_mask(partition, xmask))),
        frozenset(partition.ids_of(_upper_mask(partition, xmask))),
    )


def membership_status(partition: Partition, members: Iterable[str],
                      z: str) -> MembershipStatus:
    """Whether z is certainly in, certainly out of, or possibly in the set."""
    xmask = partition.mask_of(members)
    if z not in partition.block_index:
        raise UnknownObject(z)
    bmask = partition.block_masks[partition.block_index[z]]
    if bmask & xmask == bmask:
        return MembershipStatus.CERTAINLY_IN
    if bmask & xmask == 0:
        return MembershipStatus.CERTAINLY_OUT
    return MembershipStatus.POSSIBLY
