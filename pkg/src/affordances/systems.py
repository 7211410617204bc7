"""Attribute systems, information tables, and indiscernibility partitions.

An attribute system assigns each object a finite set of value atoms per
attribute. When every cell holds exactly one atom the system is an
information table (finite, total, single valued) and induces the
indiscernibility partition: two objects share a block exactly when their
value vectors agree on every attribute. Property systems are the
one-attribute case and get no special treatment here.

Tables are immutable and compute their partition eagerly at construction,
so everything downstream shares one partition object per table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    LoadError,
    MissingValue,
    NondeterministicSystem,
    UnknownObject,
)

# A value atom is a plain string, non-empty after trimming. Validation
# happens wherever atoms enter the model.
Atom = str


def _clean_atom(raw: str, where: str) -> Atom:
    atom = raw.strip()
    if not atom:
        raise LoadError(f"empty value atom in {where}")
    return atom


def _check_unique(items: Iterable[str], kind: str, where: str) -> None:
    seen = set()
    for item in items:
        if item in seen:
            raise LoadError(f"duplicate {kind} {item!r} in {where}")
        seen.add(item)


@dataclass(frozen=True)
class Partition:
    """A partition of a table's objects, in canonical order.

    universe lists the object ids in table order. Blocks are ordered by
    the table position of their first member, and members inside a block
    keep table order as well. The index maps and per-block bitmasks are
    derived once; approximation code works on the masks and converts ids
    only at the boundary.
    """

    universe: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...]
    block_index: Mapping[str, int] = field(compare=False, repr=False)
    position: Mapping[str, int] = field(compare=False, repr=False)
    block_masks: tuple[int, ...] = field(compare=False, repr=False)

    @staticmethod
    def group(universe: Iterable[str], key) -> "Partition":
        """Partition universe by a key function, in canonical order."""
        universe = tuple(universe)
        groups: dict[object, list[str]] = {}
        for x in universe:
            groups.setdefault(key(x), []).append(x)
        blocks = tuple(tuple(members) for members in groups.values())
        position = {x: i for i, x in enumerate(universe)}
        block_index = {}
        masks = []
        for bi, block in enumerate(blocks):
            mask = 0
            for x in block:
                block_index[x] = bi
                mask |= 1 << position[x]
            masks.append(mask)
        return Partition(universe, blocks, block_index, position, tuple(masks))

    def mask_of(self, ids: Iterable[str]) -> int:
        mask = 0
        for x in ids:
            pos = self.position.get(x)
            if pos is None:
                raise UnknownObject(x)
            mask |= 1 << pos
        return mask

    def ids_of(self, mask: int) -> set[str]:
        return {x for x in self.universe if mask >> self.position[x] & 1}

    def block_of(self, x: str) -> tuple[str, ...]:
        """The block containing x."""
        bi = self.block_index.get(x)
        if bi is None:
            raise UnknownObject(x)
        return self.blocks[bi]


@dataclass(frozen=True)
class ASystem:
    """A set-valued attribute system.

    cells maps (object id, attribute name) to the atoms the object takes
    for that attribute, in first-listed order. A cell may be empty (no
    information) or hold several atoms (indeterminate). The map must be
    total over objects x attributes.
    """

    name: str
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    cells: Mapping[tuple[str, str], tuple[Atom, ...]]

    def __post_init__(self):
        where = f"system {self.name!r}"
        _check_unique(self.objects, "object id", where)
        _check_unique(self.attributes, "attribute name", where)
        normalized: dict[tuple[str, str], tuple[Atom, ...]] = {}
        for x in self.objects:
            for a in self.attributes:
                if (x, a) not in self.cells:
                    raise LoadError(f"missing cell ({x!r}, {a!r}) in {where}")
                atoms = []
                for raw in self.cells[(x, a)]:
                    atom = _clean_atom(raw, f"cell ({x!r}, {a!r}) of {where}")
                    if atom not in atoms:
                        atoms.append(atom)
                normalized[(x, a)] = tuple(atoms)
        if len(self.cells) != len(normalized):
            raise LoadError(f"cells outside objects x attributes in {where}")
        object.__setattr__(self, "cells", normalized)


@dataclass(frozen=True)
class AttributeTable:
    """A finite, total, single-valued attribute system.

    rows maps each object id to its value vector in attribute order. The
    object list must be non-empty; the attribute list may be empty, in
    which case all objects are indiscernible.
    """

    name: str
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: Mapping[str, tuple[Atom, ...]]
    partition: Partition = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        where = f"table {self.name!r}"
        if not self.objects:
            raise LoadError(f"{where} has no objects")
        _check_unique(self.objects, "object id", where)
        _check_unique(self.attributes, "attribute name", where)
        width = len(self.attributes)
        normalized: dict[str, tuple[Atom, ...]] = {}
        for x in self.objects:
            row = self.rows.get(x)
            if row is None:
                raise LoadError(f"missing row for object {x!r} in {where}")
            if len(row) != width:
                raise LoadError(
                    f"row for object {x!r} in {where} has {len(row)} cells, "
                    f"expected {width}"
                )
            normalized[x] = tuple(
                _clean_atom(atom, f"row {x!r} of {where}") for atom in row
            )
        if len(self.rows) != len(normalized):
            raise LoadError(f"rows for unknown objects in {where}")
        object.__setattr__(self, "rows", normalized)
        object.__setattr__(
            self, "partition", Partition.group(self.objects, normalized.__getitem__)
        )


def is_deterministic(system: ASystem) -> bool:
    """True when no cell holds more than one atom. Empty cells count."""
    return all(len(atoms) <= 1 for atoms in system.cells.values())


def to_attribute_table(system: ASystem) -> AttributeTable:
    """Collapse a set-valued system to an information table.

    Raises NondeterministicSystem for the first cell with several atoms
    and MissingValue for the first empty cell, scanning objects in table
    order and attributes left to right.
    """
    rows: dict[str, tuple[Atom, ...]] = {}
    for x in system.objects:
        vector = []
        for a in system.attributes:
            atoms = system.cells[(x, a)]
            if len(atoms) > 1:
                raise NondeterministicSystem(x, a)
            if not atoms:
                raise MissingValue(x, a)
            vector.append(atoms[0])
        rows[x] = tuple(vector)
    return AttributeTable(system.name, system.objects, system.attributes, rows)


def value_vector(table: AttributeTable, x: str) -> tuple[Atom, ...]:
    """The value vector of x in attribute order."""
    row = table.rows.get(x)
    if row is None:
        raise UnknownObject(x)
    return row


def indiscernibility_partition(table: AttributeTable) -> Partition:
    """The partition induced by identical value vectors.

    Tables compute this eagerly; the function exists so the operation has
    a name and returns the shared instance.
    """
    return table.partition
