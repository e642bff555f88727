from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import systems
from patternrace.errors import (
    BadDistribution,
    DuplicatePattern,
    InvalidAlphabet,
    NotReduced,
    UnknownLetter,
    ZeroProbabilityLetter,
)
from patternrace.exactmath import Poly
from patternrace.patterns import (
    Alphabet,
    Distribution,
    Pattern,
    coin,
    correlation_poly,
    make_system,
    pattern_prob,
    uniform,
    validate_system,
)

half = Fraction(1, 2)


def pat(w):
    return Pattern(tuple(w))


def test_validate_examples():
    s = make_system(coin(), ["THH", "HTH", "HHT"])
    assert s.m == 3 and s.lengths == (3, 3, 3)
    with pytest.raises(NotReduced) as ei:
        make_system(coin(), ["TH", "THH"])
    assert (ei.value.i, ei.value.j) == (1, 0)
    assert str(ei.value) == "'TH' is a substring of 'THH'"
    make_system(uniform("ACGT"), ["ACG", "ATG", "AG"])


def test_not_reduced_in_the_middle():
    with pytest.raises(NotReduced):
        make_system(coin(), ["HTTH", "TT"])


def test_reducedness_is_order_insensitive():
    for order in (["TH", "THH"], ["THH", "TH"]):
        with pytest.raises(NotReduced):
            make_system(coin(), order)


def test_duplicates_rejected():
    with pytest.raises(DuplicatePattern):
        validate_system(coin(), [pat("HT"), Pattern(("H", "T"), "other")])


def test_zero_probability_letter():
    d = Distribution.from_mapping({"H": 1, "T": 0})
    with pytest.raises(ZeroProbabilityLetter):
        make_system(d, ["HT"])
    make_system(d, ["HH"])


def test_bad_distribution_and_alphabet():
    with pytest.raises(BadDistribution):
        Distribution.from_mapping({"H": half, "T": Fraction(1, 3)})
    with pytest.raises(BadDistribution):
        Distribution.from_mapping({"H": Fraction(3, 2), "T": -half})
    with pytest.raises(BadDistribution):
        Distribution.from_mapping({"H": 1}, ["H", "T"])
    with pytest.raises(InvalidAlphabet):
        Alphabet(("H", "H"))
    with pytest.raises(InvalidAlphabet):
        Alphabet(())
    with pytest.raises(UnknownLetter):
        make_system(coin(), ["HX"])


def test_multichar_letters():
    d = uniform(["AUG", "UAA", "GGC"])
    s = make_system(d, ["AUG GGC", "UAA"])
    assert s.patterns[0].symbols == ("AUG", "GGC")
    assert s.patterns[0].label == "AUG GGC"
    assert pattern_prob(d, s.patterns[0]) == Fraction(1, 9)


def test_pattern_prob_examples():
    assert pattern_prob(coin(), pat("THH")) == Fraction(1, 8)
    assert pattern_prob(uniform("ACGT"), pat("ACG")) == Fraction(1, 64)
    p = Fraction(2, 7)
    assert pattern_prob(coin(p), pat("H")) == p


def test_correlation_examples_fair():
    d = coin()
    a, b = pat("THH"), pat("THTH")
    assert correlation_poly(d, a, b) == Poly([0, half])
    assert correlation_poly(d, b, a) == Poly()
    assert correlation_poly(d, a, a) == 1
    assert correlation_poly(d, b, b) == Poly([1, 0, Fraction(1, 4)])


@pytest.mark.parametrize("p", [Fraction(1, 3), Fraction(2, 5), Fraction(9, 10)])
def test_correlation_examples_biased(p):
    d, q = coin(p), 1 - p
    a, b = pat("THH"), pat("THTH")
    assert correlation_poly(d, a, b) == Poly([0, p])
    assert correlation_poly(d, b, b) == Poly([1, 0, p * q])
    assert correlation_poly(d, pat("HTH"), pat("THH")) == Poly([0, 0, p * q])


@settings(suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow], max_examples=60)
@given(systems())
def test_correlation_constant_terms(sys):
    for i, a in enumerate(sys.patterns):
        for j, b in enumerate(sys.patterns):
            c0 = correlation_poly(sys.dist, a, b).coeff(0)
            assert c0 == (1 if i == j else 0)


@given(st.lists(st.sampled_from("HT"), min_size=1, max_size=6), st.lists(st.sampled_from("HT"), min_size=1, max_size=6),
       st.fractions(min_value=0, max_value=1, max_denominator=20))
def test_pattern_prob_multiplicative(u, v, p):
    d = coin(p)
    assert pattern_prob(d, pat(u + v)) == pattern_prob(d, pat(u)) * pattern_prob(d, pat(v))
