"""Exact computation in 2x2 and 3x3 tropical matrix monoids."""

from .errors import LimitExceeded, ParseError, RangeError, SpecMismatch
from .factorize import eval_word, factor, factor_maxplus2, factor_minplus2
from .froidure_pin import (
    EnumerationResult,
    element_word,
    enumerate_monoid,
    enumerate_semigroup,
    member,
    naive_closure,
)
from .generators import (
    GeneratorSet,
    conj3_gens,
    gen_matrix,
    maxplus2_gens,
    minplus2_gens,
)
from .matrix import TropMatrix, identity, mat_decode, mat_encode, mat_format, mat_mul, mat_parse
from .semiring import ABSORB, BOOLEAN, Family, SemiringSpec, max_plus, min_plus
from .verify import check_conjecture, small_generating_set, verify_full, verify_irredundant
