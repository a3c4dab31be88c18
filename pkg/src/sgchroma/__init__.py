"""Signed graph colourings, signed minors, balanced quotients and bounded-order scans."""

from .color import (
    BalancedCover,
    CircularColoring,
    HomToKtildePlus,
    ZeroFreeColoring,
    balanced_to_zero_free,
    check_hom_to_ktilde_plus,
    chi,
    chi_b,
    enumerate_balanced_sets,
    lift_to_circular,
    verify_circular,
    verify_cover,
)
from .core import (
    BoundExceeded,
    Graph,
    ParseError,
    SignedGraph,
    canonical_form,
    from_canonical,
    is_balanced,
    max_positive_switching,
    minus,
    parse,
    switch,
    tilde,
    walk_sign,
)
from .fraclp import chi_f, chi_fb, solve_covering_lp
from .minor import (
    CriticalDefect,
    has_even_odd_minor,
    has_ktilde_minor,
    has_ktilde_subdivision,
    has_odd_minor,
    negative_path_dichotomy,
    verify_certificate,
)
from .quotient import balanced_quotient, verify_quotient

__version__ = "0.1.0"
