"""Seeded structure generation, a definition-literal evaluator, the law
suite, and strictness witness search.

The evaluator in this module shares no evaluation logic with the
operators module on purpose. It walks whole cross products straight from
the quantifier definitions, computes indiscernibility classes by
comparing value vectors, and touches no bitmasks, no caches, and no
saturation shortcuts. Disagreement between the two routes on any
operator means one of them is wrong.

Laws are checked on seeded random structures. Subset pools per sort are
exhaustive up to 4 objects (16 subsets) and a deterministic 12-subset
sample above that; cheap algebraic laws consume the full pool cross
product per coordinate while oracle-backed and mask laws draw a
deterministic sample of argument pairs. Reports render as one record
per law: ``LAW <name> PASS|FAIL trials=<n> [witness=<digest>]``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from hashlib import sha256
from typing import Callable, Iterable, Mapping, Sequence

from . import operators as ops
from . import rough
from .affordance import AffordanceStructure, Sort, Triple
from .errors import UnknownOperator
from .operators import ALL_MASKS, FULL_MASK, RelationSelector
from .storage import structure_digest
from .systems import AttributeTable

_SORTS = (Sort.A, Sort.O, Sort.E)
_SELECTORS = (RelationSelector.RAW, RelationSelector.UPPER, RelationSelector.LOWER)


def _derive_seed(*parts) -> int:
    """A process-independent 64-bit seed from the given parts."""
    text = ":".join(str(p) for p in parts)
    return int.from_bytes(sha256(text.encode()).digest()[:8], "big")


# --- generation ---------------------------------------------------------


@dataclass(frozen=True)
class GenConfig:
    """Knobs for the random structure generator.

    Equal configs generate byte-identical structures. duplicate_row_bias
    is the chance that a row copies an earlier one, which keeps the
    partitions non-trivial often enough for the saturation machinery to
    matter.
    """

    seed: int
    max_objects_per_sort: int = 5
    max_attributes: int = 3
    max_atoms_per_attribute: int = 3
    phi_density: float = 0.3
    duplicate_row_bias: float = 0.35

    def __post_init__(self):
        for name in ("max_objects_per_sort", "max_attributes",
                     "max_atoms_per_attribute"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        for name in ("phi_density", "duplicate_row_bias"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


_TABLE_SPECS = (
    ("actors", "a", "p"),
    ("objects", "o", "q"),
    ("environments", "e", "r"),
)


def generate(cfg: GenConfig) -> AffordanceStructure:
    """A random structure, fully determined by the config."""
    rng = random.Random(cfg.seed)
    tables = []
    for table_name, object_prefix, attribute_prefix in _TABLE_SPECS:
        n_objects = rng.randint(1, cfg.max_objects_per_sort)
        n_attributes = rng.randint(1, cfg.max_attributes)
        atom_counts = [rng.randint(1, cfg.max_atoms_per_attribute)
                       for _ in range(n_attributes)]
        ids = tuple(f"{object_prefix}{i}" for i in range(1, n_objects + 1))
        attributes = tuple(f"{attribute_prefix}{j}"
                           for j in range(1, n_attributes + 1))
        rows: dict[str, tuple[str, ...]] = {}
        history: list[tuple[str, ...]] = []
        for index, x in enumerate(ids):
            if index > 0 and rng.random() < cfg.duplicate_row_bias:
                row = history[rng.randrange(index)]
            else:
                row = tuple(f"v{rng.randint(1, atom_counts[j])}"
                            for j in range(n_attributes))
            rows[x] = row
            history.append(row)
        tables.append(AttributeTable(table_name, ids, attributes, rows))
    actors, objects, environments = tables
    phi = []
    for a in actors.objects:
        for o in objects.objects:
            for e in environments.objects:
                if rng.random() < cfg.phi_density:
                    phi.append(Triple(a, o, e))
    return AffordanceStructure(actors, objects, environments, phi, "generated")


# --- the definition-literal evaluator -----------------------------------
#
# Nothing below this marker may call into operators, rough, or the
# structure's saturation cache. Classes, approximations, saturations,
# and operator results are all recomputed from their definitions.


def _naive_class(table: AttributeTable, x: str) -> list[str]:
    vector = table.rows[x]
    return [y for y in table.objects if table.rows[y] == vector]


def _naive_upper(table: AttributeTable, members: Iterable[str]) -> set[str]:
    members = set(members)
    return {z for z in table.objects
            if any(m in members for m in _naive_class(table, z))}


def _naive_lower(table: AttributeTable, members: Iterable[str]) -> set[str]:
    members = set(members)
    return {z for z in table.objects
            if all(m in members for m in _naive_class(table, z))}


def naive_upper_phi(s: AffordanceStructure) -> set[tuple[str, str, str]]:
    """The upper saturation, by full product enumeration."""
    phi = {tuple(t) for t in s.phi}
    out = set()
    for a in s.actors.objects:
        for o in s.objects.objects:
            for e in s.environments.objects:
                if any((x, y, z) in phi
                       for x in _naive_class(s.actors, a)
                       for y in _naive_class(s.objects, o)
                       for z in _naive_class(s.environments, e)):
                    out.add((a, o, e))
    return out


def naive_lower_phi(s: AffordanceStructure) -> set[tuple[str, str, str]]:
    """The lower saturation, by full product enumeration."""
    phi = {tuple(t) for t in s.phi}
    out = set()
    for a in s.actors.objects:
        for o in s.objects.objects:
            for e in s.environments.objects:
                if all((x, y, z) in phi
                       for x in _naive_class(s.actors, a)
                       for y in _naive_class(s.objects, o)
                       for z in _naive_class(s.environments, e)):
                    out.add((a, o, e))
    return out


def _naive_relation(s: AffordanceStructure,
                    sel: RelationSelector) -> set[tuple[str, str, str]]:
    if sel is RelationSelector.UPPER:
        return naive_upper_phi(s)
    if sel is RelationSelector.LOWER:
        return naive_lower_phi(s)
    return {tuple(t) for t in s.phi}


def _frame(s: AffordanceStructure, coord: Sort):
    """Argument tables and a triple builder for a coordinate."""
    if coord is Sort.E:
        return (s.actors, s.objects, s.environments,
                lambda u, v, w: (u, v, w))
    if coord is Sort.O:
        return (s.actors, s.environments, s.objects,
                lambda u, v, w: (u, w, v))
    return (s.objects, s.environments, s.actors,
            lambda u, v, w: (w, u, v))


def naive_eval(s: AffordanceStructure, op_name: str,
               sel: RelationSelector = RelationSelector.RAW,
               coord: Sort = Sort.E,
               X: Iterable[str] = (), Y: Iterable[str] = (),
               mask: Iterable[int] | None = None):
    """Evaluate an operator by its literal definition.

    op_name is one of poss, suff, nec, dusuff, suffstar, necu, possu,
    alpha_up, alpha_low, cyl, upper_affordance, lower_affordance. The
    affordance saturations ignore sel, coord, X, and Y.
    """
    if op_name == "upper_affordance":
        return naive_upper_phi(s)
    if op_name == "lower_affordance":
        return naive_lower_phi(s)
    X = set(X)
    Y = set(Y)
    relation = _naive_relation(s, sel)
    first, second, own, mk = _frame(s, coord)
    firsts, seconds, owns = first.objects, second.objects, own.objects
    if op_name == "poss":
        return {w for w in owns
                if any(mk(u, v, w) in relation for u in X for v in Y)}
    if op_name == "suff":
        return {w for w in owns
                if all(mk(u, v, w) in relation for u in X for v in Y)}
    if op_name == "nec":
        return {w for w in owns
                if all(u in X or v in Y or mk(u, v, w) not in relation
                       for u in firsts for v in seconds)}
    if op_name == "dusuff":
        return {w for w in owns
                if any(mk(u, v, w) not in relation
                       for u in firsts if u not in X
                       for v in seconds if v not in Y)}
    if op_name == "suffstar":
        return {w for w in owns
                if all(mk(u, v, w) in relation
                       for u in firsts if u not in X
                       for v in seconds if v not in Y)}
    if op_name == "necu":
        return {w for w in owns
                if all(u in X or v in Y or mk(u, v, w) not in relation
                       for u in firsts for v in seconds)
                and all(mk(u, v, w) in relation
                        for u in firsts if u not in X
                        for v in seconds if v not in Y)}
    if op_name == "possu":
        return {w for w in owns
                if any(mk(u, v, w) in relation for u in X for v in Y)
                or not all(mk(u, v, w) in relation for u in X for v in Y)}
    if op_name == "alpha_up":
        digits = set(mask) if mask is not None else {1, 2, 3}
        XX = _naive_upper(first, X) if 2 in digits else X
        YY = _naive_upper(second, Y) if 3 in digits else Y
        return {w for w in owns
                if any(mk(u, v, w2) in relation
                       for u in XX for v in YY
                       for w2 in (_naive_class(own, w) if 1 in digits
                                  else [w]))}
    if op_name == "alpha_low":
        XX = _naive_lower(first, X)
        YY = _naive_lower(second, Y)
        return {w for w in owns
                if all(mk(u, v, w2) in relation
                       for u in XX for v in YY
                       for w2 in _naive_class(own, w))}
    if op_name == "cyl":
        return {(u, v) for u in firsts for v in seconds
                if any(mk(u, v, w) in relation for w in owns)}
    raise UnknownOperator(op_name)


# --- law suite ----------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    structure_digest: str
    trial: int
    seed: int
    coordinate: str | None
    X: tuple[str, ...] | None
    Y: tuple[str, ...] | None
    detail: str


@dataclass
class LawReport:
    name: str
    structures_checked: int = 0
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def format_report(report: LawReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    line = f"LAW {report.name} {status} trials={report.structures_checked}"
    if report.counterexample is not None:
        line += f" witness={report.counterexample.structure_digest}"
    return line


class _Trial:
    """One generated structure plus deterministic argument pools."""

    def __init__(self, structure: AffordanceStructure, index: int, seed: int):
        self.s = structure
        self.index = index
        self.seed = seed
        self._digest: str | None = None
        self._pools: dict[Sort, list[frozenset[str]]] = {}
        self._pairs: dict[Sort, list] = {}
        self._naive_structures: dict[RelationSelector, AffordanceStructure] = {}

    def digest(self) -> str:
        if self._digest is None:
            self._digest = structure_digest(self.s)
        return self._digest

    def pool(self, sort: Sort) -> list[frozenset[str]]:
        if sort not in self._pools:
            ids = self.s.sort_ids(sort)
            if len(ids) <= 4:
                subsets = [frozenset(combo)
                           for size in range(len(ids) + 1)
                           for combo in itertools.combinations(ids, size)]
            else:
                subsets = [frozenset(), frozenset(ids)]
                subsets += [frozenset({x}) for x in ids]
                rng = random.Random(_derive_seed(self.seed, "pool", sort.value))
                while len(subsets) < 12:
                    bits = rng.randrange(1, 1 << len(ids))
                    candidate = frozenset(
                        x for i, x in enumerate(ids) if bits >> i & 1)
                    if candidate not in subsets:
                        subsets.append(candidate)
            self._pools[sort] = subsets
        return self._pools[sort]

    def pairs(self, coord: Sort):
        """The full cross product of the two argument pools."""
        if coord not in self._pairs:
            first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
            self._pairs[coord] = [
                (X, Y)
                for X in self.pool(first_sort) for Y in self.pool(second_sort)
            ]
        return self._pairs[coord]

    def some_pairs(self, coord: Sort, salt: str, k: int = 12):
        """A deterministic sample of argument pairs, corners included."""
        first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
        firsts = self.pool(first_sort)
        seconds = self.pool(second_sort)
        empty_first, full_first = firsts[0], frozenset(self.s.sort_ids(first_sort))
        empty_second, full_second = seconds[0], frozenset(self.s.sort_ids(second_sort))
        out = [(empty_first, empty_second), (empty_first, full_second),
               (full_first, empty_second), (full_first, full_second)]
        rng = random.Random(_derive_seed(self.seed, "pairs", coord.value, salt))
        attempts = 0
        while len(out) < k and attempts < 8 * k:
            attempts += 1
            pair = (firsts[rng.randrange(len(firsts))],
                    seconds[rng.randrange(len(seconds))])
            if pair not in out:
                out.append(pair)
        return out

    def naive_structure(self, sel: RelationSelector) -> AffordanceStructure:
        """The structure with phi replaced by its naive saturation.

        Computed once per trial so selector variants of oracle checks do
        not redo the full product walk for every argument pair. The
        saturation itself still comes from the definition-literal route.
        """
        if sel not in self._naive_structures:
            if sel is RelationSelector.UPPER:
                phi = naive_upper_phi(self.s)
            else:
                phi = naive_lower_phi(self.s)
            self._naive_structures[sel] = self.s.with_phi(
                (Triple(*t) for t in phi))
        return self._naive_structures[sel]

    def render(self, sort: Sort, members: Iterable[str]) -> tuple[str, ...]:
        position = self.s.partition(sort).position
        return tuple(sorted(members, key=position.__getitem__))

    def cex(self, coord: Sort | None, X, Y, detail: str) -> Counterexample:
        if coord is None:
            rendered_x = tuple(sorted(X)) if X is not None else None
            rendered_y = tuple(sorted(Y)) if Y is not None else None
        else:
            first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
            rendered_x = self.render(first_sort, X) if X is not None else None
            rendered_y = self.render(second_sort, Y) if Y is not None else None
        return Counterexample(
            self.digest(), self.index, self.seed,
            coord.value if coord is not None else None,
            rendered_x, rendered_y, detail,
        )


def _show(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _compare(ctx: _Trial, coord, X, Y, what: str, lhs, rhs,
             inclusion: bool = False) -> Counterexample | None:
    lhs, rhs = set(lhs), set(rhs)
    if inclusion:
        if lhs <= rhs:
            return None
        detail = f"{what}: {_show(lhs)} not within {_show(rhs)}"
    else:
        if lhs == rhs:
            return None
        detail = f"{what}: {_show(lhs)} != {_show(rhs)}"
    return ctx.cex(coord, X, Y, detail)


# Each law is a function from a trial context to the first counterexample
# it finds, or None. Registry order is report order.


def _law_wmia(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for sel in _SELECTORS:
            pair_source = (ctx.pairs(coord) if sel is RelationSelector.RAW
                           else ctx.some_pairs(coord, f"wmia-{sel.value}"))
            for X, Y in pair_source:
                if not X or not Y:
                    continue
                cex = _compare(
                    ctx, coord, X, Y, f"suff vs poss over {sel.value}",
                    ops.suff(ctx.s, sel, coord, X, Y),
                    ops.poss(ctx.s, sel, coord, X, Y),
                    inclusion=True)
                if cex:
                    return cex
    return None


def _duality_law(op_fast: Callable, op_name: str):
    def law(ctx: _Trial) -> Counterexample | None:
        for coord in _SORTS:
            for X, Y in ctx.some_pairs(coord, f"duality-{op_name}", k=10):
                cex = _compare(
                    ctx, coord, X, Y, f"{op_name} complement vs quantifier form",
                    op_fast(ctx.s, RelationSelector.RAW, coord, X, Y),
                    naive_eval(ctx.s, op_name, RelationSelector.RAW, coord, X, Y))
                if cex:
                    return cex
        # Selector variants, on the corners of coordinate E.
        for sel in (RelationSelector.UPPER, RelationSelector.LOWER):
            derived = ctx.naive_structure(sel)
            for X, Y in ctx.some_pairs(Sort.E, f"duality-{op_name}-{sel.value}",
                                       k=6):
                cex = _compare(
                    ctx, Sort.E, X, Y,
                    f"{op_name} complement vs quantifier form over {sel.value}",
                    op_fast(ctx.s, sel, Sort.E, X, Y),
                    naive_eval(derived, op_name, RelationSelector.RAW,
                               Sort.E, X, Y))
                if cex:
                    return cex
        return None
    return law


def _law_necu_closed(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
        full_first = set(ctx.s.sort_ids(first_sort))
        full_second = set(ctx.s.sort_ids(second_sort))
        own = set(ctx.s.sort_ids(coord))
        for sel in _SELECTORS:
            pair_source = (ctx.pairs(coord) if sel is RelationSelector.RAW
                           else ctx.some_pairs(coord, f"necu-{sel.value}", k=8))
            for X, Y in pair_source:
                expected = own if (set(X) == full_first
                                   or set(Y) == full_second) else set()
                cex = _compare(ctx, coord, X, Y,
                               f"nec_u closed form over {sel.value}",
                               ops.nec_u(ctx.s, sel, coord, X, Y), expected)
                if cex:
                    return cex
    return None


def _law_possu_closed(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        own = set(ctx.s.sort_ids(coord))
        for sel in _SELECTORS:
            pair_source = (ctx.pairs(coord) if sel is RelationSelector.RAW
                           else ctx.some_pairs(coord, f"possu-{sel.value}", k=8))
            for X, Y in pair_source:
                expected = own if (X and Y) else set()
                cex = _compare(ctx, coord, X, Y,
                               f"poss_u closed form over {sel.value}",
                               ops.poss_u(ctx.s, sel, coord, X, Y), expected)
                if cex:
                    return cex
    return None


def _law_discriminators(ctx: _Trial) -> Counterexample | None:
    raw = RelationSelector.RAW
    for coord in _SORTS:
        first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
        full_first = set(ctx.s.sort_ids(first_sort))
        full_second = set(ctx.s.sort_ids(second_sort))
        own = set(ctx.s.sort_ids(coord))
        for X in ctx.pool(first_sort):
            for what, got in (
                ("nec with full second argument",
                 ops.nec(ctx.s, raw, coord, X, full_second)),
                ("suff with empty second argument",
                 ops.suff(ctx.s, raw, coord, X, ())),
            ):
                cex = _compare(ctx, coord, X, None, what, got, own)
                if cex:
                    return cex
        for Y in ctx.pool(second_sort):
            for what, got in (
                ("nec with full first argument",
                 ops.nec(ctx.s, raw, coord, full_first, Y)),
                ("suff with empty first argument",
                 ops.suff(ctx.s, raw, coord, (), Y)),
            ):
                cex = _compare(ctx, coord, None, Y, what, got, own)
                if cex:
                    return cex
    return None


def _law_affordance_sandwich(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    if not (s.lower_phi <= s.phi and s.phi <= s.upper_phi):
        return ctx.cex(None, None, None,
                       "saturations do not sandwich the relation")
    return None


def _law_affordance_idempotence(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    if s.with_phi(s.upper_phi).upper_phi != s.upper_phi:
        return ctx.cex(None, None, None,
                       "upper saturation is not a fixed point of itself")
    if s.with_phi(s.lower_phi).lower_phi != s.lower_phi:
        return ctx.cex(None, None, None,
                       "lower saturation is not a fixed point of itself")
    return None


def _law_upper_invariance(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for X, Y in ctx.pairs(coord):
            cex = _compare(
                ctx, coord, X, Y, "full-mask alpha_upper over raw vs upper",
                ops.alpha_upper(ctx.s, coord, FULL_MASK, X, Y),
                ops.alpha_upper(ctx.s, coord, FULL_MASK, X, Y,
                                sel=RelationSelector.UPPER))
            if cex:
                return cex
    return None


def _law_lower_invariance(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for X, Y in ctx.pairs(coord):
            cex = _compare(
                ctx, coord, X, Y, "alpha_lower over raw vs lower",
                ops.alpha_lower(ctx.s, coord, X, Y),
                ops.alpha_lower(ctx.s, coord, X, Y,
                                sel=RelationSelector.LOWER))
            if cex:
                return cex
    return None


def _law_mask_inclusion_raw_upper(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for X, Y in ctx.some_pairs(coord, "mask-raw-upper"):
            for mask in ALL_MASKS:
                cex = _compare(
                    ctx, coord, X, Y,
                    f"alpha_upper mask={sorted(mask)} raw vs upper",
                    ops.alpha_upper(ctx.s, coord, mask, X, Y),
                    ops.alpha_upper(ctx.s, coord, mask, X, Y,
                                    sel=RelationSelector.UPPER),
                    inclusion=True)
                if cex:
                    return cex
    return None


def _law_mask_inclusion_upper_full(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for X, Y in ctx.some_pairs(coord, "mask-upper-full"):
            full = ops.alpha_upper(ctx.s, coord, FULL_MASK, X, Y)
            for mask in ALL_MASKS:
                cex = _compare(
                    ctx, coord, X, Y,
                    f"alpha_upper mask={sorted(mask)} over upper vs full mask",
                    ops.alpha_upper(ctx.s, coord, mask, X, Y,
                                    sel=RelationSelector.UPPER),
                    full, inclusion=True)
                if cex:
                    return cex
    return None


def _law_alpha_empty_mask(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for X, Y in ctx.some_pairs(coord, "empty-mask", k=8):
            cex = _compare(
                ctx, coord, X, Y, "empty-mask alpha_upper vs poss",
                ops.alpha_upper(ctx.s, coord, (), X, Y),
                ops.poss(ctx.s, RelationSelector.RAW, coord, X, Y))
            if cex:
                return cex
    return None


def _law_mixed_poss_upper(ctx: _Trial) -> Counterexample | None:
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y, "poss over upper vs full-mask alpha_upper",
            ops.poss(ctx.s, RelationSelector.UPPER, Sort.E, X, Y),
            ops.alpha_upper(ctx.s, Sort.E, FULL_MASK, X, Y))
        if cex:
            return cex
    return None


def _law_mixed_poss_closure(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    pa, po, pe = s.partition(Sort.A), s.partition(Sort.O), s.partition(Sort.E)
    for X, Y in ctx.pairs(Sort.E):
        inner = ops.poss(s, RelationSelector.RAW, Sort.E,
                         rough.upper(pa, X), rough.upper(po, Y))
        cex = _compare(
            ctx, Sort.E, X, Y,
            "upper closure of poss on roughened arguments vs alpha_upper",
            rough.upper(pe, inner),
            ops.alpha_upper(s, Sort.E, FULL_MASK, X, Y))
        if cex:
            return cex
    return None


def _law_mixed_suff_lower(ctx: _Trial) -> Counterexample | None:
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y, "suff over lower vs alpha_lower",
            ops.suff(ctx.s, RelationSelector.LOWER, Sort.E, X, Y),
            ops.alpha_lower(ctx.s, Sort.E, X, Y),
            inclusion=True)
        if cex:
            return cex
    return None


def _law_mixed_suff_closure(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    pa, po, pe = s.partition(Sort.A), s.partition(Sort.O), s.partition(Sort.E)
    for X, Y in ctx.pairs(Sort.E):
        inner = ops.suff(s, RelationSelector.RAW, Sort.E,
                         rough.lower(pa, X), rough.lower(po, Y))
        cex = _compare(
            ctx, Sort.E, X, Y,
            "lower closure of suff on shrunk arguments vs alpha_lower",
            rough.lower(pe, inner),
            ops.alpha_lower(s, Sort.E, X, Y))
        if cex:
            return cex
    return None


def _law_poss_upper_args(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    pa, po = s.partition(Sort.A), s.partition(Sort.O)
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y, "poss over upper with roughened vs raw arguments",
            ops.poss(s, RelationSelector.UPPER, Sort.E,
                     rough.upper(pa, X), rough.upper(po, Y)),
            ops.poss(s, RelationSelector.UPPER, Sort.E, X, Y))
        if cex:
            return cex
    return None


def _law_suff_lower_args(ctx: _Trial) -> Counterexample | None:
    # As stated, this equality is false in general; the witness search
    # and the documentation discuss why. It stays in the registry so the
    # suite reports the failure instead of hiding it.
    s = ctx.s
    pa, po = s.partition(Sort.A), s.partition(Sort.O)
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y, "suff over lower with shrunk vs raw arguments",
            ops.suff(s, RelationSelector.LOWER, Sort.E,
                     rough.lower(pa, X), rough.lower(po, Y)),
            ops.suff(s, RelationSelector.LOWER, Sort.E, X, Y))
        if cex:
            return cex
    return None


def _law_suff_lower_args_inclusion(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    pa, po = s.partition(Sort.A), s.partition(Sort.O)
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y,
            "suff over lower, raw arguments within shrunk arguments",
            ops.suff(s, RelationSelector.LOWER, Sort.E, X, Y),
            ops.suff(s, RelationSelector.LOWER, Sort.E,
                     rough.lower(pa, X), rough.lower(po, Y)),
            inclusion=True)
        if cex:
            return cex
    return None


def _law_alpha_lower_arg_idempotence(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    pa, po = s.partition(Sort.A), s.partition(Sort.O)
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y, "alpha_lower on shrunk vs raw arguments",
            ops.alpha_lower(s, Sort.E, rough.lower(pa, X), rough.lower(po, Y)),
            ops.alpha_lower(s, Sort.E, X, Y))
        if cex:
            return cex
    return None


def _law_alpha_upper_arg_idempotence(ctx: _Trial) -> Counterexample | None:
    s = ctx.s
    pa, po = s.partition(Sort.A), s.partition(Sort.O)
    for X, Y in ctx.pairs(Sort.E):
        cex = _compare(
            ctx, Sort.E, X, Y, "alpha_upper on roughened vs raw arguments",
            ops.alpha_upper(s, Sort.E, FULL_MASK,
                            rough.upper(pa, X), rough.upper(po, Y)),
            ops.alpha_upper(s, Sort.E, FULL_MASK, X, Y))
        if cex:
            return cex
    return None


def _law_poss_monotone(ctx: _Trial) -> Counterexample | None:
    raw = RelationSelector.RAW
    for coord in _SORTS:
        first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
        seconds = [frozenset(), frozenset(ctx.s.sort_ids(second_sort)),
                   ctx.pool(second_sort)[len(ctx.pool(second_sort)) // 2]]
        for small, large in itertools.combinations(ctx.pool(first_sort), 2):
            if not small <= large:
                continue
            for Y in seconds:
                cex = _compare(
                    ctx, coord, small, Y,
                    f"poss monotone in first argument (up to {_show(large)})",
                    ops.poss(ctx.s, raw, coord, small, Y),
                    ops.poss(ctx.s, raw, coord, large, Y),
                    inclusion=True)
                if cex:
                    return cex
    return None


def _law_suff_antitone(ctx: _Trial) -> Counterexample | None:
    raw = RelationSelector.RAW
    for coord in _SORTS:
        first_sort, second_sort = ops.ARGUMENT_SORTS[coord]
        seconds = [frozenset(), frozenset(ctx.s.sort_ids(second_sort)),
                   ctx.pool(second_sort)[len(ctx.pool(second_sort)) // 2]]
        for small, large in itertools.combinations(ctx.pool(first_sort), 2):
            if not small <= large:
                continue
            for Y in seconds:
                cex = _compare(
                    ctx, coord, large, Y,
                    f"suff antitone in first argument (down from {_show(small)})",
                    ops.suff(ctx.s, raw, coord, large, Y),
                    ops.suff(ctx.s, raw, coord, small, Y),
                    inclusion=True)
                if cex:
                    return cex
    return None


def _law_rough_sandwich(ctx: _Trial) -> Counterexample | None:
    for sort in _SORTS:
        partition = ctx.s.partition(sort)
        for X in ctx.pool(sort):
            low = rough.lower(partition, X)
            up = rough.upper(partition, X)
            if not (low <= set(X) <= up):
                return ctx.cex(None, ctx.render(sort, X), None,
                               f"sort {sort.value}: approximations do not "
                               f"sandwich the set")
    return None


def _law_rough_duality(ctx: _Trial) -> Counterexample | None:
    for sort in _SORTS:
        partition = ctx.s.partition(sort)
        universe = set(ctx.s.sort_ids(sort))
        for X in ctx.pool(sort):
            lhs = rough.lower(partition, X)
            rhs = universe - rough.upper(partition, universe - set(X))
            if lhs != rhs:
                return ctx.cex(None, ctx.render(sort, X), None,
                               f"sort {sort.value}: lower is not the dual of "
                               f"upper: {_show(lhs)} != {_show(rhs)}")
    return None


def _law_rough_idempotence(ctx: _Trial) -> Counterexample | None:
    for sort in _SORTS:
        partition = ctx.s.partition(sort)
        for X in ctx.pool(sort):
            up = rough.upper(partition, X)
            low = rough.lower(partition, X)
            if rough.upper(partition, up) != up:
                return ctx.cex(None, ctx.render(sort, X), None,
                               f"sort {sort.value}: upper approximation is "
                               f"not idempotent")
            if rough.lower(partition, low) != low:
                return ctx.cex(None, ctx.render(sort, X), None,
                               f"sort {sort.value}: lower approximation is "
                               f"not idempotent")
    return None


def _law_rough_saturation(ctx: _Trial) -> Counterexample | None:
    for sort in _SORTS:
        partition = ctx.s.partition(sort)
        for X in ctx.pool(sort):
            for approx in (rough.upper(partition, X),
                           rough.lower(partition, X)):
                for block in partition.blocks:
                    hit = set(block) & approx
                    if hit and hit != set(block):
                        return ctx.cex(
                            None, ctx.render(sort, X), None,
                            f"sort {sort.value}: approximation splits the "
                            f"block {_show(block)}")
    return None


def _law_rough_monotonicity(ctx: _Trial) -> Counterexample | None:
    for sort in _SORTS:
        partition = ctx.s.partition(sort)
        pool = ctx.pool(sort)
        for small, large in itertools.combinations(pool, 2):
            if not small <= large:
                continue
            if not rough.upper(partition, small) <= rough.upper(partition, large):
                return ctx.cex(None, ctx.render(sort, small), None,
                               f"sort {sort.value}: upper not monotone up to "
                               f"{_show(large)}")
            if not rough.lower(partition, small) <= rough.lower(partition, large):
                return ctx.cex(None, ctx.render(sort, small), None,
                               f"sort {sort.value}: lower not monotone up to "
                               f"{_show(large)}")
    return None


def _law_rough_trichotomy(ctx: _Trial) -> Counterexample | None:
    for sort in _SORTS:
        partition = ctx.s.partition(sort)
        universe = set(ctx.s.sort_ids(sort))
        for X in ctx.pool(sort):
            statuses = {z: rough.membership_status(partition, X, z)
                        for z in universe}
            certain = {z for z, st in statuses.items()
                       if st is rough.MembershipStatus.CERTAINLY_IN}
            out = {z for z, st in statuses.items()
                   if st is rough.MembershipStatus.CERTAINLY_OUT}
            maybe = {z for z, st in statuses.items()
                     if st is rough.MembershipStatus.POSSIBLY}
            if certain != rough.lower(partition, X) \
                    or maybe != rough.boundary(partition, X) \
                    or out != universe - rough.upper(partition, X):
                return ctx.cex(None, ctx.render(sort, X), None,
                               f"sort {sort.value}: statuses disagree with "
                               f"the approximations")
    return None


_FAST_OPS: Mapping[str, Callable] = {
    "poss": ops.poss,
    "suff": ops.suff,
    "nec": ops.nec,
    "dusuff": ops.dusuff,
    "suffstar": ops.suff_star,
    "necu": ops.nec_u,
    "possu": ops.poss_u,
}


def _oracle_law(op_name: str):
    fast = _FAST_OPS[op_name]

    def law(ctx: _Trial) -> Counterexample | None:
        for coord in _SORTS:
            for X, Y in ctx.some_pairs(coord, f"oracle-{op_name}", k=10):
                cex = _compare(
                    ctx, coord, X, Y, f"{op_name}: fast route vs oracle",
                    fast(ctx.s, RelationSelector.RAW, coord, X, Y),
                    naive_eval(ctx.s, op_name, RelationSelector.RAW,
                               coord, X, Y))
                if cex:
                    return cex
        for sel in (RelationSelector.UPPER, RelationSelector.LOWER):
            derived = ctx.naive_structure(sel)
            for coord in _SORTS:
                for X, Y in ctx.some_pairs(
                        coord, f"oracle-{op_name}-{sel.value}", k=6):
                    cex = _compare(
                        ctx, coord, X, Y,
                        f"{op_name} over {sel.value}: fast route vs oracle",
                        fast(ctx.s, sel, coord, X, Y),
                        naive_eval(derived, op_name, RelationSelector.RAW,
                                   coord, X, Y))
                    if cex:
                        return cex
        return None
    return law


def _law_oracle_alpha_upper(ctx: _Trial) -> Counterexample | None:
    masks = (frozenset(),) + ALL_MASKS
    for coord in _SORTS:
        for X, Y in ctx.some_pairs(coord, "oracle-alpha-upper", k=6):
            for mask in masks:
                cex = _compare(
                    ctx, coord, X, Y,
                    f"alpha_upper mask={sorted(mask)}: fast route vs oracle",
                    ops.alpha_upper(ctx.s, coord, mask, X, Y),
                    naive_eval(ctx.s, "alpha_up", RelationSelector.RAW,
                               coord, X, Y, mask=mask))
                if cex:
                    return cex
    derived = ctx.naive_structure(RelationSelector.UPPER)
    for X, Y in ctx.some_pairs(Sort.E, "oracle-alpha-upper-sel", k=4):
        cex = _compare(
            ctx, Sort.E, X, Y,
            "alpha_upper over upper: fast route vs oracle",
            ops.alpha_upper(ctx.s, Sort.E, frozenset({2, 3}), X, Y,
                            sel=RelationSelector.UPPER),
            naive_eval(derived, "alpha_up", RelationSelector.RAW,
                       Sort.E, X, Y, mask=frozenset({2, 3})))
        if cex:
            return cex
    return None


def _law_oracle_alpha_lower(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        for X, Y in ctx.some_pairs(coord, "oracle-alpha-lower", k=8):
            cex = _compare(
                ctx, coord, X, Y, "alpha_lower: fast route vs oracle",
                ops.alpha_lower(ctx.s, coord, X, Y),
                naive_eval(ctx.s, "alpha_low", RelationSelector.RAW,
                           coord, X, Y))
            if cex:
                return cex
    derived = ctx.naive_structure(RelationSelector.LOWER)
    for X, Y in ctx.some_pairs(Sort.E, "oracle-alpha-lower-sel", k=4):
        cex = _compare(
            ctx, Sort.E, X, Y, "alpha_lower over lower: fast route vs oracle",
            ops.alpha_lower(ctx.s, Sort.E, X, Y, sel=RelationSelector.LOWER),
            naive_eval(derived, "alpha_low", RelationSelector.RAW,
                       Sort.E, X, Y))
        if cex:
            return cex
    return None


def _law_oracle_cyl(ctx: _Trial) -> Counterexample | None:
    for coord in _SORTS:
        cex = _compare(
            ctx, coord, None, None, "cylindrify: fast route vs oracle",
            ops.cylindrify(ctx.s, RelationSelector.RAW, coord),
            naive_eval(ctx.s, "cyl", RelationSelector.RAW, coord))
        if cex:
            return cex
        for sel in (RelationSelector.UPPER, RelationSelector.LOWER):
            cex = _compare(
                ctx, coord, None, None,
                f"cylindrify over {sel.value}: fast route vs oracle",
                ops.cylindrify(ctx.s, sel, coord),
                naive_eval(ctx.naive_structure(sel), "cyl",
                           RelationSelector.RAW, coord))
            if cex:
                return cex
    return None


def _law_oracle_upper_affordance(ctx: _Trial) -> Counterexample | None:
    lhs = {tuple(t) for t in ctx.s.upper_phi}
    rhs = naive_eval(ctx.s, "upper_affordance")
    if lhs != rhs:
        return ctx.cex(None, None, None,
                       "upper affordance: fast route vs oracle disagree")
    return None


def _law_oracle_lower_affordance(ctx: _Trial) -> Counterexample | None:
    lhs = {tuple(t) for t in ctx.s.lower_phi}
    rhs = naive_eval(ctx.s, "lower_affordance")
    if lhs != rhs:
        return ctx.cex(None, None, None,
                       "lower affordance: fast route vs oracle disagree")
    return None


def _registry() -> list[tuple[str, Callable[[_Trial], Counterexample | None]]]:
    laws: list[tuple[str, Callable[[_Trial], Counterexample | None]]] = [
        ("wmia-suff-implies-poss", _law_wmia),
        ("duality-nec-coherence", _duality_law(ops.nec, "nec")),
        ("duality-dusuff-coherence", _duality_law(ops.dusuff, "dusuff")),
        ("necu-closed-form", _law_necu_closed),
        ("possu-closed-form", _law_possu_closed),
        ("nec-suff-discriminators", _law_discriminators),
        ("rough-affordance-sandwich", _law_affordance_sandwich),
        ("affordance-saturation-idempotence", _law_affordance_idempotence),
        ("alpha-upper-invariance", _law_upper_invariance),
        ("alpha-lower-invariance", _law_lower_invariance),
        ("mask-inclusion-raw-within-upper", _law_mask_inclusion_raw_upper),
        ("mask-inclusion-upper-within-full", _law_mask_inclusion_upper_full),
        ("alpha-upper-empty-mask-is-poss", _law_alpha_empty_mask),
        ("mixed-poss-upper-is-alpha-upper", _law_mixed_poss_upper),
        ("mixed-poss-closure-is-alpha-upper", _law_mixed_poss_closure),
        ("mixed-suff-lower-within-alpha-lower", _law_mixed_suff_lower),
        ("mixed-suff-closure-is-alpha-lower", _law_mixed_suff_closure),
        ("poss-upper-arg-roughening-invariant", _law_poss_upper_args),
        ("suff-lower-arg-lowering-invariant", _law_suff_lower_args),
        ("suff-lower-arg-lowering-inclusion", _law_suff_lower_args_inclusion),
        ("alpha-lower-arg-idempotence", _law_alpha_lower_arg_idempotence),
        ("alpha-upper-arg-idempotence", _law_alpha_upper_arg_idempotence),
        ("poss-monotone", _law_poss_monotone),
        ("suff-antitone", _law_suff_antitone),
        ("rough-set-sandwich", _law_rough_sandwich),
        ("rough-set-duality", _law_rough_duality),
        ("rough-set-idempotence", _law_rough_idempotence),
        ("rough-set-saturation", _law_rough_saturation),
        ("rough-set-monotonicity", _law_rough_monotonicity),
        ("rough-set-trichotomy", _law_rough_trichotomy),
    ]
    for op_name in _FAST_OPS:
        laws.append((f"oracle-{op_name}", _oracle_law(op_name)))
    laws += [
        ("oracle-alpha-upper", _law_oracle_alpha_upper),
        ("oracle-alpha-lower", _law_oracle_alpha_lower),
        ("oracle-cylindrify", _law_oracle_cyl),
        ("oracle-upper-affordance", _law_oracle_upper_affordance),
        ("oracle-lower-affordance", _law_oracle_lower_affordance),
    ]
    return laws


def law_names() -> tuple[str, ...]:
    return tuple(name for name, _ in _registry())


def check_laws(cfg: GenConfig, trials: int,
               names: Sequence[str] | None = None,
               structures: Sequence[AffordanceStructure] | None = None
               ) -> list[LawReport]:
    """Run the law suite over generated structures.

    A law stops checking once it has a counterexample; its report keeps
    the count of structures it saw. Passing explicit structures replaces
    generation (the config still seeds argument sampling).
    """
    registry = _registry()
    known = {name for name, _ in registry}
    if names is not None:
        unknown = [n for n in names if n not in known]
        if unknown:
            raise ValueError(f"unknown law names: {unknown}")
        registry = [(n, fn) for n, fn in registry if n in set(names)]
    if structures is None:
        master = random.Random(cfg.seed)
        seeds = [master.getrandbits(63) for _ in range(trials)]
        trial_iter = (
            (index, seed, generate(replace(cfg, seed=seed)))
            for index, seed in enumerate(seeds)
        )
    else:
        trial_iter = (
            (index, _derive_seed(cfg.seed, "given", index), s)
            for index, s in enumerate(structures)
        )
    reports = {name: LawReport(name) for name, _ in registry}
    for index, seed, structure in trial_iter:
        ctx = _Trial(structure, index, seed)
        for name, fn in registry:
            report = reports[name]
            if report.counterexample is not None:
                continue
            report.structures_checked += 1
            report.counterexample = fn(ctx)
    return [reports[name] for name, _ in registry]


# --- strictness witnesses ------------------------------------------------


class StrictnessClaim(Enum):
    STRICT_UPPER = "strict-upper"
    STRICT_LOWER = "strict-lower"


@dataclass(frozen=True)
class Witness:
    claim: StrictnessClaim
    structure: AffordanceStructure
    coordinate: Sort
    mask: frozenset[int] | None
    X: tuple[str, ...]
    Y: tuple[str, ...]
    smaller: tuple[str, ...]
    larger: tuple[str, ...]
    digest: str = field(default="")


def vacuity_structure() -> tuple[AffordanceStructure, frozenset[str], frozenset[str]]:
    """The deterministic vacuity witness.

    Two indiscernible actors of which X keeps only one, so the lower
    approximation of X is empty; with an empty relation alpha_lower is
    vacuously the whole environment sort while suff over the lower
    saturation is empty.
    """
    actors = AttributeTable(
        "actors", ("p1", "p2"), ("trait",),
        {"p1": ("v1",), "p2": ("v1",)})
    objects = AttributeTable("objects", ("o1",), ("kind",), {"o1": ("ball",)})
    environments = AttributeTable(
        "environments", ("e1",), ("site",), {"e1": ("court",)})
    s = AffordanceStructure(actors, objects, environments, (), "vacuity")
    return s, frozenset({"p1"}), frozenset({"o1"})


def _probe_strict_upper(s: AffordanceStructure, ctx: _Trial
                        ) -> Witness | None:
    mask = frozenset({2, 3})
    for coord in _SORTS:
        for X, Y in ctx.some_pairs(coord, "witness-strict-upper", k=20):
            over_raw = ops.alpha_upper(s, coord, mask, X, Y)
            over_upper = ops.alpha_upper(s, coord, mask, X, Y,
                                         sel=RelationSelector.UPPER)
            if over_raw < over_upper:
                oracle_raw = naive_eval(s, "alpha_up", RelationSelector.RAW,
                                        coord, X, Y, mask=mask)
                oracle_upper = naive_eval(s, "alpha_up", RelationSelector.UPPER,
                                          coord, X, Y, mask=mask)
                if oracle_raw != over_raw or oracle_upper != over_upper:
                    continue
                return Witness(
                    StrictnessClaim.STRICT_UPPER, s, coord, mask,
                    ctx.render(ops.ARGUMENT_SORTS[coord][0], X),
                    ctx.render(ops.ARGUMENT_SORTS[coord][1], Y),
                    ctx.render(coord, over_raw),
                    ctx.render(coord, over_upper),
                    structure_digest(s))
    return None


def find_witness(claim: StrictnessClaim, cfg: GenConfig,
                 budget: int = 1000) -> Witness | None:
    """Search for a strictness witness, verified against the oracle.

    The lower claim is satisfied by a deterministic construction; the
    upper claim searches generated structures, at most budget of them.
    """
    if claim is StrictnessClaim.STRICT_LOWER:
        s, X, Y = vacuity_structure()
        ctx = _Trial(s, 0, cfg.seed)
        full = set(s.environments.objects)
        al = naive_eval(s, "alpha_low", RelationSelector.RAW, Sort.E, X, Y)
        sf = naive_eval(s, "suff", RelationSelector.LOWER, Sort.E, X, Y)
        if al != full or sf == full:
            return None
        if ops.alpha_lower(s, Sort.E, X, Y) != al \
                or ops.suff(s, RelationSelector.LOWER, Sort.E, X, Y) != sf:
            return None
        return Witness(claim, s, Sort.E, None,
                       ctx.render(Sort.A, X), ctx.render(Sort.O, Y),
                       ctx.render(Sort.E, sf), ctx.render(Sort.E, al),
                       structure_digest(s))
    master = random.Random(cfg.seed)
    for index in range(budget):
        seed = master.getrandbits(63)
        s = generate(replace(cfg, seed=seed))
        ctx = _Trial(s, index, seed)
        witness = _probe_strict_upper(s, ctx)
        if witness is not None:
            return witness
    return None
