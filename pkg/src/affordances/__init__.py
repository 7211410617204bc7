"""Reasoning about affordances as ternary relations over described sorts.

Three attribute tables describe actors, objects, and environments; a
relation over the three sorts records which combinations afford an
action. Indiscernibility inside each table turns subsets rough, the
relation itself rough, and the modal-style operators in
:mod:`affordances.operators` approximable per coordinate.
"""

from importlib import resources
from pathlib import Path

from .affordance import (AffordanceStructure, RoughAffordance, Sort, Triple,
                         lower_affordance, rough_affordance, upper_affordance)
from .errors import AffordanceError
from .operators import (FULL_MASK, RelationSelector, alpha_lower, alpha_upper,
                        cylindrify, dusuff, nec, nec_u, poss, poss_u, suff,
                        suff_star)
from .rough import MembershipStatus, RoughSet, approximate, membership_status
from .storage import NamedSet, load_structure, structure_digest, write_bundle
from .systems import (ASystem, AttributeTable, Partition,
                      indiscernibility_partition, is_deterministic,
                      to_attribute_table)

__all__ = [
    "AffordanceError", "AffordanceStructure", "ASystem", "AttributeTable",
    "FULL_MASK", "MembershipStatus", "NamedSet", "Partition",
    "RelationSelector", "RoughAffordance", "RoughSet", "Sort", "Triple",
    "alpha_lower", "alpha_upper", "approximate", "cylindrify", "dusuff",
    "indiscernibility_partition", "is_deterministic", "load_structure",
    "lower_affordance", "membership_status", "nec", "nec_u", "poss", "poss_u",
    "rough_affordance", "sample_path", "structure_digest", "suff", "suff_star",
    "to_attribute_table", "upper_affordance", "write_bundle",
]


def sample_path(name: str) -> Path:
    """Filesystem path of a bundled sample (tv, actors, playgrounds, dunk)."""
    return Path(str(resources.files(__package__) / "samples" / name))
