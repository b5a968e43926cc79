"""Primitive and L-primitive words in free monoids and in submonoids of N."""

from .errors import (
    BudgetExceeded,
    EmptyLanguage,
    EmptyWord,
    LPrimError,
    NotNumerical,
    ParseError,
    PreconditionViolated,
    TrivialSubmonoid,
    UnknownCheck,
)
from .languages import (
    ComplementOf,
    Explicit,
    FiniteLanguage,
    PowClosure,
    descend_to_lp_root,
    is_commutative,
    is_l_primitive,
    is_prefix_set,
    l_primitive_roots,
    l_root_of_language,
    load_language,
    lp_set_up_to,
    lp_words_in,
    parse_language,
    root_of_language,
)
from .numeric import (
    NumericLanguage,
    SubmonoidSpec,
    classify_lp_count,
    enumerate_lp_in_H,
    frobenius,
    gcd_of,
    is_numerical_monoid,
    membership,
    minimal_generators,
    normalize,
    numeric_is_l_primitive,
    parse_generators,
    parse_numeric_language,
)
from .submonoid import (
    WordSubmonoidSpec,
    classify_lp_count_words,
    classify_primitive_count,
    classify_root_count,
    word_membership,
)
from .verdict import Classification
from .words import Alphabet, RootDecomposition, is_primitive, power, primitive_root, smallest_period

__version__ = "0.1.0"
