"""Exact computation with prime-order elements of finite linear groups.

The package builds finite fields and dense matrix algebra from
scratch, enumerates primitive prime divisors, classifies ppd and
stingray elements, constructs the explicit modules used in the
accompanying verification suites (deleted permutation modules, SL2
symmetric cubes, twisted tensor squares), and exposes everything
through the ``stingray`` command-line tool.
"""

__version__ = "0.1.0"

from .ffield import make_field, field_from_q
from .fpoly import DensePoly
from .fmatrix import DenseMatrix, Subspace
from .ppd import primitive_prime_divisors, is_eppd_prime, multiplicative_order
from .cyclo import (CyclotomicInt, solve_multiplicities, stingray_criterion,
                    trivial_multiplicity)
from .classify import (classify_element, is_stingray_oracle,
                       construct_stingray, eigenvalue_multiplicities)
from .groups import (MatrixGroup, deleted_perm_module, sl2_module,
                     classical_generators, group_order, is_irreducible,
                     spin)
from .harness import (parse_mgrp, write_mgrp, verify_suite, sample_stingray,
                      default_seed)

__all__ = [
    "__version__",
    "make_field", "field_from_q",
    "DensePoly", "DenseMatrix", "Subspace",
    "primitive_prime_divisors", "is_eppd_prime", "multiplicative_order",
    "CyclotomicInt", "solve_multiplicities", "stingray_criterion",
    "trivial_multiplicity",
    "classify_element", "is_stingray_oracle", "construct_stingray",
    "eigenvalue_multiplicities",
    "MatrixGroup", "deleted_perm_module", "sl2_module",
    "classical_generators", "group_order", "is_irreducible", "spin",
    "parse_mgrp", "write_mgrp", "verify_suite", "sample_stingray",
    "default_seed",
]
