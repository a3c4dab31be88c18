from fractions import Fraction

from conftest import C, K
from sgchroma import witness
from sgchroma.color import chi_b, lift_to_circular, check_hom_to_ktilde_plus, balanced_to_zero_free
from sgchroma.core import SignedGraph, is_balanced, minus, tilde
from sgchroma.fraclp import chi_fb
from sgchroma.minor import (
    has_even_odd_minor,
    has_ktilde_minor,
    has_ktilde_subdivision,
    negative_path_dichotomy,
)
from sgchroma.quotient import balanced_quotient


def roundtrip(x):
    assert witness.loads(witness.dumps(x)) == x


def test_colour_witnesses():
    g = minus(K(4))
    _, cover = chi_b(g)
    roundtrip(cover)
    roundtrip(lift_to_circular(g, cover))
    roundtrip(check_hom_to_ktilde_plus(g, 2))
    roundtrip(balanced_to_zero_free(g, cover))
    roundtrip(is_balanced(g).cycle)


def test_shape():
    g = tilde(C(5))
    _, w = chi_fb(g)
    d = witness.to_json(w)
    assert d["objective"] == "5/2"
    assert all(isinstance(S, list) and isinstance(x, str) for S, x in d["weights"])
    roundtrip(w)
    c = witness.to_json(lift_to_circular(minus(K(3)), chi_b(minus(K(3)))[1]))
    assert c["r"] == "4/1" and all("/" in p for p in c["phi"])


def test_minor_witnesses():
    roundtrip(has_ktilde_minor(minus(K(3)), 2))
    roundtrip(has_ktilde_subdivision(tilde(K(3)), 3))
    roundtrip(has_even_odd_minor(K(5), 3))
    roundtrip(negative_path_dichotomy(tilde(K(2)), [0, 1], 1))
    roundtrip(balanced_quotient(minus(C(5))))


def test_rationals():
    assert witness.rational(Fraction(6, 4)) == "3/2"
    assert witness.parse_rational("3/2") == Fraction(3, 2)
    assert witness.to_json(SignedGraph(1, ((0, 0, 1),)))["edges"] == [[0, 0, 1]]
