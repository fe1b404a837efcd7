"""pstab: exact finite-group computations around p-stability and fusion systems."""

from .config import Caps, DEFAULT_CAPS, caps_from_env
from .errors import (BadParameters, DegreeCapExceeded, MismatchedSylow, NotCentric,
                     NotFullyNormalized, NotNormal, NotNormalInF, NotNormalized,
                     OrderCapExceeded, PstabError)
from .group import (Group, Hom, Subgroup, center, centralizer, coset_action,
                    direct_product, generate, induced_automizer, normalizer,
                    p_core, p_part, quotient, subgroup, sylow,
                    triple_commutator_in, trivial_group)
from .iso import is_isomorphic
from .lattice import all_subgroups_in, p_subgroup_classes, subgroup_classes

__version__ = "0.1.0"
