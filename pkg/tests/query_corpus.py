"""Shared query corpus: every operator name, sort, selector, and mask.

All VALID queries reference named sets shipped with the dunk sample, so
each one both round-trips through the printer and evaluates against a
real structure. MALFORMED entries carry the exact 1-based position the
parser must report.
"""

VALID = [
    "poss[E](TallPros, Basketballs)",
    "poss[O](TallPros, DunkSpots)",
    "poss[A](Balls, DunkSpots)",
    "suff[E](Empty@A, Balls)",
    "suff[O](TallPros, DunkSpots)",
    "suff[A](Basketballs, DunkSpots)",
    "nec[E](TallPros, Basketballs)",
    "nec[O](TallPros, DunkSpots)",
    "nec[A](Balls, DunkSpots)",
    "dusuff[E](TallPros, Basketballs)",
    "dusuff[O](Empty@A, DunkSpots)",
    "dusuff[A](Balls, DunkSpots)",
    "suffstar[E](TallPros, Basketballs)",
    "suffstar[O](TallPros, DunkSpots)",
    "suffstar[A](Balls, DunkSpots)",
    "necu[E](TallPros, Basketballs)",
    "necu[O](TallPros, DunkSpots)",
    "necu[A](Balls, DunkSpots)",
    "possu[E](TallPros, Basketballs)",
    "possu[O](TallPros, DunkSpots)",
    "possu[A](Balls, DunkSpots)",
    "alpha_up[E; mask=1](TallPros, Basketballs)",
    "alpha_up[O; mask=2](TallPros, DunkSpots)",
    "alpha_up[A; mask=3](Balls, DunkSpots)",
    "alpha_up[E; mask=12](TallPros, Basketballs)",
    "alpha_up[E; mask=13](TallPros, Basketballs)",
    "alpha_up[E; mask=23](TallPros, Basketballs)",
    "alpha_up[E; mask=123](TallPros, Basketballs)",
    "alpha_low[E](TallPros, Basketballs)",
    "alpha_low[O](TallPros, DunkSpots)",
    "alpha_low[A](Balls, DunkSpots)",
    "cyl[E]",
    "cyl[O; raw]",
    "cyl[A; lower]",
    "poss[E; upper](up(TallPros)@A, up(Basketballs)@O)",
    "suff[E; lower](low(TallPros)@A, low(Basketballs)@O)",
    "nec[O; upper](TallPros, DunkSpots)",
    "alpha_up[E; upper; mask=23](TallPros, Basketballs)",
    "alpha_up[E; raw](TallPros, Basketballs)",
    "possu[E; lower](TallPros, Basketballs)",
    "(TallPros | Empty@A) & !(Empty)@A \\ TallPros",
    "up(low(TallPros)@A)@A | Empty",
    "suff[E](TallPros & TallPros, Basketballs | Basketballs)",
]

# (text, line, column) of the first reported error.
MALFORMED = [
    ("poss[E](TallPros,", 1, 18),
    ("poss[Q](TallPros, Basketballs)", 1, 6),
    ("foo[E](X, Y)", 1, 1),
    ("alpha_up[E; mask=14](X, Y)", 1, 18),
    ("alpha_low[E; mask=12](X, Y)", 1, 14),
    ("poss || X", 1, 6),
    ("up is bad", 1, 4),
    ("TallPros |", 1, 11),
    ("poss[E](TallPros; Basketballs)", 1, 17),
    ("$bad", 1, 1),
    ("poss[E; fancy](X, Y)", 1, 9),
    ("low(X)@Z", 1, 8),
    ("poss[E](TallPros,\n  Nope@@O)", 2, 8),
]
