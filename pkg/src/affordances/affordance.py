"""Affordance structures: a ternary relation over three information tables.

An affordance relates actors, objects, and environments: a triple
(a, o, e) is in the relation when actor a can perform the action on
object o in environment e. The relation need not be saturated under the
tables' indiscernibility partitions, and that is meaningful: two actors
with identical rows may still differ on unrecorded factors.

The upper affordance replaces each member triple by the full product of
its three blocks; the lower affordance keeps exactly the block products
that lie entirely inside the relation. Both are materialized once per
structure on first use and cached behind a lock.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .errors import LoadError
from .systems import AttributeTable, Partition


class Sort(str, Enum):
    """The three sorts of a structure. Also used to pick a coordinate."""

    A = "A"
    O = "O"
    E = "E"


class Triple(NamedTuple):
    a: str
    o: str
    e: str


@dataclass(frozen=True)
class RoughAffordance:
    """Lower and upper saturations of an affordance relation."""

    lower: frozenset[Triple]
    upper: frozenset[Triple]

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError("lower affordance exceeds upper affordance")


class AffordanceStructure:
    """Three attribute tables plus the afforded triples.

    Components of every triple must name objects of the matching table.
    Instances are immutable by convention; the saturation caches are the
    only mutable state and are computed at most once.
    """

    def __init__(self, actors: AttributeTable, objects: AttributeTable,
                 environments: AttributeTable, phi: Iterable[Triple],
                 action_label: str | None = None):
        self.actors = actors
        self.objects = objects
        self.environments = environments
        self.phi = frozenset(Triple(*t) for t in phi)
        self.action_label = action_label
        for t in sorted(self.phi):
            if t.a not in actors.rows:
                raise LoadError(f"triple {t} names unknown actor {t.a!r}")
            if t.o not in objects.rows:
                raise LoadError(f"triple {t} names unknown object {t.o!r}")
            if t.e not in environments.rows:
                raise LoadError(f"triple {t} names unknown environment {t.e!r}")
        self._lock = threading.Lock()
        self._saturations: tuple[frozenset[Triple], frozenset[Triple]] | None = None

    def table(self, sort: Sort) -> AttributeTable:
        if sort is Sort.A:
            return self.actors
        if sort is Sort.O:
            return self.objects
        return self.environments

    def sort_ids(self, sort: Sort) -> tuple[str, ...]:
        return self.table(sort).objects

    def partition(self, sort: Sort) -> Partition:
        return self.table(sort).partition

    def _saturate(self) -> tuple[frozenset[Triple], frozenset[Triple]]:
        with self._lock:
            if self._saturations is None:
                pa = self.actors.partition
                po = self.objects.partition
                pe = self.environments.partition
                counts: dict[tuple[int, int, int], int] = {}
                for t in self.phi:
                    sig = (pa.block_index[t.a], po.block_index[t.o],
                           pe.block_index[t.e])
                    counts[sig] = counts.get(sig, 0) + 1
                up: set[Triple] = set()
                low: set[Triple] = set()
                for (ba, bo, be), n in counts.items():
                    block_a = pa.blocks[ba]
                    block_o = po.blocks[bo]
                    block_e = pe.blocks[be]
                    product = {
                        Triple(x, y, z)
                        for x in block_a for y in block_o for z in block_e
                    }
                    up |= product
                    if n == len(block_a) * len(block_o) * len(block_e):
                        low |= product
                self._saturations = (frozenset(low), frozenset(up))
        return self._saturations

    @property
    def lower_phi(self) -> frozenset[Triple]:
        return self._saturate()[0]

    @property
    def upper_phi(self) -> frozenset[Triple]:
        return self._saturate()[1]

    def with_phi(self, phi: Iterable[Triple],
                 action_label: str | None = None) -> "AffordanceStructure":
        """A sibling structure over the same tables."""
        return AffordanceStructure(
            self.actors, self.objects, self.environments, phi,
            action_label if action_label is not None else self.action_label,
        )


def upper_affordance(structure: AffordanceStructure) -> frozenset[Triple]:
    """Triples whose block product meets the relation."""
    return structure.upper_phi


def lower_affordance(structure: AffordanceStructure) -> frozenset[Triple]:
    """Triples whose block product is contained in the relation."""
    return structure.lower_phi


def rough_affordance(structure: AffordanceStructure) -> RoughAffordance:
    return RoughAffordance(structure.lower_phi, structure.upper_phi)
