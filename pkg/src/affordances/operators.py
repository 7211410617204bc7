"""Modal and approximation operators over an affordance structure.

Every operator fixes one coordinate, where its result lives, and takes
two argument sets over the remaining coordinates in (actor, object,
environment) order:

    coordinate E: arguments (X over A, Y over O)
    coordinate O: arguments (X over A, Z over E)
    coordinate A: arguments (Y over O, Z over E)

The relation an operator reads is chosen by a selector: the raw triples,
their upper saturation, or their lower saturation. Saturations come from
the structure's cache, so they are materialized once and shared.

poss collects the coordinate values that some argument pair reaches
inside the relation; suff keeps the values reached by every argument
pair. nec and dusuff are exposed in their definitional complement forms;
suff_star, nec_u, and poss_u are the derived combinations. The
approximation operators roughen chosen slots before testing: alpha_upper
roughens by a mask (1 widens the result slot to its block, 2 and 3 take
the upper approximation of the first and second argument), alpha_lower
always shrinks both arguments to their lower approximations and widens
the result slot. cylindrify projects the relation onto the two non-fixed
coordinates.
"""

from __future__ import annotations

from enum import Enum
from typing import FrozenSet, Iterable

from . import rough
from .affordance import AffordanceStructure, Sort, Triple
from .errors import SortMismatch

Coordinate = Sort

RoughnessMask = FrozenSet[int]

FULL_MASK: RoughnessMask = frozenset({1, 2, 3})
PARTIAL_MASKS: tuple[RoughnessMask, ...] = (
    frozenset({1}), frozenset({2}), frozenset({3}),
    frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3}),
)
ALL_MASKS: tuple[RoughnessMask, ...] = PARTIAL_MASKS + (FULL_MASK,)


class RelationSelector(Enum):
    RAW = "raw"
    UPPER = "upper"
    LOWER = "lower"


# Positions inside a triple: (first argument, second argument, own slot).
_LAYOUT: dict[Sort, tuple[int, int, int]] = {
    Sort.A: (1, 2, 0),
    Sort.O: (0, 2, 1),
    Sort.E: (0, 1, 2),
}

# Which sorts the two arguments range over, per coordinate.
ARGUMENT_SORTS: dict[Sort, tuple[Sort, Sort]] = {
    Sort.A: (Sort.O, Sort.E),
    Sort.O: (Sort.A, Sort.E),
    Sort.E: (Sort.A, Sort.O),
}


def _relation(s: AffordanceStructure,
              sel: RelationSelector) -> frozenset[Triple]:
    if sel is RelationSelector.RAW:
        return s.phi
    if sel is RelationSelector.UPPER:
        return s.upper_phi
    return s.lower_phi


def _checked(s: AffordanceStructure, sort: Sort, members: Iterable[str],
             where: str) -> frozenset[str]:
    members = frozenset(members)
    rows = s.table(sort).rows
    for x in sorted(members):
        if x not in rows:
            found = next(
                (other.value for other in Sort
                 if x in s.table(other).rows), "nothing")
            raise SortMismatch(f"{where} ({x!r})", sort.value, found)
    return members


def _arguments(s: AffordanceStructure, c: Sort, X: Iterable[str],
               Y: Iterable[str]) -> tuple[frozenset[str], frozenset[str]]:
    first_sort, second_sort = ARGUMENT_SORTS[c]
    return (
        _checked(s, first_sort, X, "first argument"),
        _checked(s, second_sort, Y, "second argument"),
    )


# --- modal operators ---------------------------------------------------


def poss(s: AffordanceStructure, sel: RelationSelector, c: Sort,
         X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """Coordinate values reached by at least one argument pair."""
    X, Y = _arguments(s, c, X, Y)
    i, j, k = _LAYOUT[c]
    return {t[k] for t in _relation(s, sel) if t[i] in X and t[j] in Y}


def suff(s: AffordanceStructure, sel: RelationSelector, c: Sort,
         X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """Coordinate values reached by every argument pair.

    Empty arguments make the condition vacuous, so the result is the
    whole sort.
    """
    X, Y = _arguments(s, c, X, Y)
    own = s.sort_ids(c)
    needed = len(X) * len(Y)
    if needed == 0:
        return set(own)
    i, j, k = _LAYOUT[c]
    counts: dict[str, int] = {}
    for t in _relation(s, sel):
        if t[i] in X and t[j] in Y:
            counts[t[k]] = counts.get(t[k], 0) + 1
    return {r for r in own if counts.get(r, 0) == needed}


def nec(s: AffordanceStructure, sel: RelationSelector, c: Sort,
        X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """Complement form: everything poss misses on the complemented arguments."""
    X, Y = _arguments(s, c, X, Y)
    first_sort, second_sort = ARGUMENT_SORTS[c]
    co_x = set(s.sort_ids(first_sort)) - X
    co_y = set(s.sort_ids(second_sort)) - Y
    return set(s.sort_ids(c)) - poss(s, sel, c, co_x, co_y)


def dusuff(s: AffordanceStructure, sel: RelationSelector, c: Sort,
           X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """Complement form: everything suff misses on the complemented arguments."""
    X, Y = _arguments(s, c, X, Y)
    first_sort, second_sort = ARGUMENT_SORTS[c]
    co_x = set(s.sort_ids(first_sort)) - X
    co_y = set(s.sort_ids(second_sort)) - Y
    return set(s.sort_ids(c)) - suff(s, sel, c, co_x, co_y)


def suff_star(s: AffordanceStructure, sel: RelationSelector, c: Sort,
              X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """suff evaluated on the complemented arguments."""
    X, Y = _arguments(s, c, X, Y)
    first_sort, second_sort = ARGUMENT_SORTS[c]
    co_x = set(s.sort_ids(first_sort)) - X
    co_y = set(s.sort_ids(second_sort)) - Y
    return suff(s, sel, c, co_x, co_y)


def nec_u(s: AffordanceStructure, sel: RelationSelector, c: Sort,
          X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """Intersection of nec and suff_star.

    Collapses to the whole sort when an argument covers its sort and to
    the empty set otherwise.
    """
    return nec(s, sel, c, X, Y) & suff_star(s, sel, c, X, Y)


def poss_u(s: AffordanceStructure, sel: RelationSelector, c: Sort,
           X: Iterable[str], Y: Iterable[str]) -> set[str]:
    """Union of poss and the complement of suff.

    Collapses to the whole sort when both arguments are non-empty and to
    the empty set otherwise.
    """
    return poss(s, sel, c, X, Y) | (set(s.sort_ids(c)) - suff(s, sel, c, X, Y))


# --- approximation operators -------------------------------------------


def alpha_upper(s: AffordanceStructure, c: Sort, mask: Iterable[int],
                X: Iterable[str], Y: Iterable[str],
                sel: RelationSelector = RelationSelector.RAW) -> set[str]:
    """Possibility with mask-selected slots roughened upward.

    Digit 1 widens the result slot from a single value to its whole
    block; digits 2 and 3 replace the first and second argument by its
    upper approximation. The empty mask reproduces poss. The relation
    defaults to the raw triples; invariance and inclusion comparisons
    pass a different selector.
    """
    mask = frozenset(mask)
    if not mask <= {1, 2, 3}:
        raise ValueError(f"mask digits must come from {{1, 2, 3}}: {sorted(mask)}")
    X, Y = _arguments(s, c, X, Y)
    first_sort, second_sort = ARGUMENT_SORTS[c]
    if 2 in mask:
        X = rough.upper(s.partition(first_sort), X)
    if 3 in mask:
        Y = rough.upper(s.partition(second_sort), Y)
    i, j, k = _LAYOUT[c]
    relation = _relation(s, sel)
    if 1 not in mask:
        return {t[k] for t in relation if t[i] in X and t[j] in Y}
    own = s.partition(c)
    out: set[str] = set()
    for t in relation:
        if t[i] in X and t[j] in Y:
            out.update(own.block_of(t[k]))
    return out


def alpha_lower(s: AffordanceStructure, c: Sort,
                X: Iterable[str], Y: Iterable[str],
                sel: RelationSelector = RelationSelector.RAW) -> set[str]:
    """Sufficiency with arguments shrunk and the result slot widened.

    A coordinate value qualifies when the product of the arguments' lower
    approximations with its whole block lies inside the relation. Empty
    lower approximations make that vacuous, so the result is the whole
    sort. There is no mask variant.
    """
    X, Y = _arguments(s, c, X, Y)
    first_sort, second_sort = ARGUMENT_SORTS[c]
    low_x = rough.lower(s.partition(first_sort), X)
    low_y = rough.lower(s.partition(second_sort), Y)
    own = s.partition(c)
    needed = len(low_x) * len(low_y)
    if needed == 0:
        return set(s.sort_ids(c))
    i, j, k = _LAYOUT[c]
    counts: dict[str, int] = {}
    for t in _relation(s, sel):
        if t[i] in low_x and t[j] in low_y:
            counts[t[k]] = counts.get(t[k], 0) + 1
    out: set[str] = set()
    for block in own.blocks:
        if all(counts.get(member, 0) == needed for member in block):
            out.update(block)
    return out


def cylindrify(s: AffordanceStructure, sel: RelationSelector,
               c: Sort) -> set[tuple[str, str]]:
    """Project the relation onto the two coordinates other than c.

    Pairs keep (actor, object, environment) order of the surviving
    coordinates.
    """
    i, j, _ = _LAYOUT[c]
    return {(t[i], t[j]) for t in _relation(s, sel)}
