"""Exact arithmetic for three-sign cancellation hypernumbers.

Hypernumbers are ``0`` or ``(sign, magnitude)`` with sign in ``{+, -, L}``
and a positive rational magnitude.  Addition is set-valued and
non-associative; see :mod:`hypernum.assoc` for the defect and
:mod:`hypernum.ambient` for the associative ambient monoid into which it
embeds.
"""
from .ambient import (AMBIENT_ZERO, AmbientElem, AmbientTrace, amb_add, ambient_trace, c_mass, iota,
                      is_obstruction_witness, obstruction_witness, p_lambda, pi)
from .assoc import AssocReport, assoc_at, defect, defect_components, permutation_reports, pml_triple
from .core import (NONZERO_SIGNS, ZERO, Hyper, HyperSet, Sign, classical_value, embed_real, hyper,
                   is_classical, mag, parse_rational, sgn, to_rational)
from .hyperadd import fold_bracketings, hyper_add, hyper_add_sets, neg
from .hyperaxioms import (AxiomReport, FiniteHypermagma, HyperfieldReport, TableError, check_axioms,
                          check_hyperfield, hypermagma_from_hyper_sample, load_fixture, parse_table)
from .mult import (NOT_A_UNIT, ONE, NotAUnit, idempotents, is_unit, mul, mul_inverse, scalar_mul, sign_mul,
                   sign_mul_ext)
from .signlayer import envelope_check, reachable, real_sign_sum_check, sign_image, sop, witnesses

__version__ = "0.1.0"
