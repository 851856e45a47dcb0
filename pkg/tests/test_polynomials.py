import random

import pytest

from matroidlab.errors import BadParams, NotArtinian
from matroidlab.fields import GF2_FIELD, GFp, Q_FIELD
from matroidlab.polynomials import (
    Ideal,
    Monomial,
    OrderIdealSet,
    Polynomial,
    groebner_basis,
    minimal_generators,
    monomial_set_is_basis,
    monomials_independent_in_quotient,
    monomials_of_degree,
    normal_form,
    order_key,
    quotient_dimension,
    quotient_dimension_macaulay,
    standard_monomials,
)

X = Monomial.variable(1)
Y = Monomial.variable(2)
X2 = Monomial.variable(1, 2)
Y2 = Monomial.variable(2, 2)
XY = X.mul(Y)


def _poly(field, nvars, text):
    return Polynomial.parse(field, nvars, text)


def test_monomial_basics():
    m = Monomial.parse("x1^2 x3")
    assert m.degree() == 3
    assert m.exponent(1) == 2 and m.exponent(2) == 0
    assert m.variables() == (1, 3)
    assert m.show() == "x1^2 x3"
    assert Monomial.parse("1") == Monomial.one()
    assert Monomial.one().show() == "1"
    assert X.mul(X) == X2
    assert X.divides(X2) and not X2.divides(X)
    assert X2.div(X) == X
    assert X.lcm(Y) == XY
    assert X.is_coprime(Y) and not X.is_coprime(XY)
    with pytest.raises(BadParams):
        Y.div(X)
    with pytest.raises(BadParams):
        Monomial.parse("z2")


def test_order_keys():
    grlex = order_key("grlex", 2)
    lex = order_key("lex", 2)
    # grlex sorts by total degree first; lex by exponent of x1 first
    assert sorted([X2, Y], key=grlex) == [Y, X2]
    assert sorted([X, Y2], key=lex) == [Y2, X]
    with pytest.raises(BadParams):
        order_key("mystery", 2)


def test_monomials_of_degree():
    assert monomials_of_degree(2, 0) == (Monomial.one(),)
    assert monomials_of_degree(0, 0) == (Monomial.one(),)
    assert monomials_of_degree(0, 3) == ()
    deg2 = monomials_of_degree(2, 2)
    assert set(deg2) == {X2, XY, Y2}
    key = order_key("grlex", 2)
    assert list(deg2) == sorted(deg2, key=key, reverse=True)


def test_polynomial_arithmetic():
    F = Q_FIELD
    a = _poly(F, 2, "x1 + x2")
    sq = a.mul(a)
    assert sq == _poly(F, 2, "x1^2 + 2 x1 x2 + x2^2")
    assert sq.is_homogeneous() and sq.total_degree() == 2
    assert a.sub(a).is_zero()
    b = _poly(GF2_FIELD, 2, "x1 + x2")
    assert b.mul(b) == _poly(GF2_FIELD, 2, "x1^2 + x2^2")
    assert _poly(F, 2, "x1^2 - x2").is_homogeneous() is False


def test_polynomial_show_parse_roundtrip():
    F = Q_FIELD
    for text in ("-x1 + x2", "x1^2 - 2 x1 x2 + 3", "1/2 x1 - x2^3"):
        p = _poly(F, 2, text)
        assert _poly(F, 2, p.show()) == p


def test_leading_and_monic():
    F = Q_FIELD
    key = order_key("grlex", 2)
    p = _poly(F, 2, "2 x1^2 + x2")
    lm, lc = p.leading(key)
    assert lm == X2 and lc == 2
    assert p.monic(key).leading(key)[1] == 1


def test_normal_form():
    F = Q_FIELD
    key = order_key("grlex", 2)
    rem = normal_form(_poly(F, 2, "x1^2"), [_poly(F, 2, "x1 - x2")], key)
    assert rem == _poly(F, 2, "x2^2")
    zero = normal_form(_poly(F, 2, "x1^2 - x2^2"),
                       [_poly(F, 2, "x1 - x2"), _poly(F, 2, "x1 + x2")], key)
    assert zero.is_zero()


def test_groebner_already_reduced_pair():
    F = Q_FIELD
    ideal = Ideal.make(F, 2, [_poly(F, 2, "x1^2 - x2"), _poly(F, 2, "x2^2 - x1")])
    gb = groebner_basis(ideal)
    key = order_key("grlex", 2)
    assert {g.leading(key)[0] for g in gb} == {X2, Y2}
    assert all(g.leading(key)[1] == F.one() for g in gb)
    sm = standard_monomials(gb, 2)
    assert set(sm) == {Monomial.one(), X, Y, XY}
    total, by_degree = quotient_dimension(ideal)
    assert total == 4


def test_groebner_with_nontrivial_spair():
    # x2 = x1^2 and x1 x2 = 1 force x1^3 = 1 in the quotient
    F = GFp(7)
    ideal = Ideal.make(F, 2, [_poly(F, 2, "x1 x2 - 1"), _poly(F, 2, "x1^2 - x2")])
    gb = groebner_basis(ideal)
    key = order_key("grlex", 2)
    assert normal_form(_poly(F, 2, "x1^3 - 1"), gb, key).is_zero()
    assert normal_form(_poly(F, 2, "x2^3 - 1"), gb, key).is_zero()
    not_member = normal_form(_poly(F, 2, "x2^3 - x1"), gb, key)
    assert not_member == _poly(F, 2, "1 - x1")


def test_quotient_dimensions_agree_on_homogeneous_ideal():
    for F in (Q_FIELD, GF2_FIELD, GFp(3)):
        gens = [_poly(F, 2, "x1^2"), _poly(F, 2, "x2^2"), _poly(F, 2, "x1 x2")]
        ideal = Ideal.make(F, 2, gens)
        g_total, g_by_deg = quotient_dimension(ideal)
        m_total, m_by_deg = quotient_dimension_macaulay(ideal)
        assert g_total == m_total == 3
        assert tuple(g_by_deg)[:2] == tuple(m_by_deg)[:2] == (1, 2)


def test_non_artinian_is_refused():
    F = Q_FIELD
    ideal = Ideal.make(F, 2, [_poly(F, 2, "x1^2")])
    with pytest.raises(NotArtinian):
        standard_monomials(groebner_basis(ideal), 2)
    with pytest.raises(NotArtinian):
        quotient_dimension_macaulay(ideal)
    with pytest.raises(NotArtinian):
        monomial_set_is_basis(ideal, [Monomial.one()])


def test_monomial_set_is_basis_kinds():
    F = Q_FIELD
    ideal = Ideal.make(F, 2, [_poly(F, 2, "x1^2"), _poly(F, 2, "x2^2")])
    good = [Monomial.one(), X, Y, XY]
    for method in ("macaulay", "groebner", "both"):
        assert monomial_set_is_basis(ideal, good, method=method).is_basis
    # independent but short: the missed standard monomial is the witness
    short = monomial_set_is_basis(ideal, good[:3])
    assert short.kind == "not_spanning"
    assert short.witness == XY
    crowded = monomial_set_is_basis(ideal, good + [X2])
    assert crowded.kind == "wrong_cardinality"
    swapped = monomial_set_is_basis(ideal, [Monomial.one(), X, Y, X2])
    assert swapped.kind == "not_independent"
    assert swapped.witness == X2


def test_monomials_independent_in_quotient():
    F = GF2_FIELD
    ideal = Ideal.make(F, 2, [_poly(F, 2, "x1^2"), _poly(F, 2, "x2^2")])
    ok, witness = monomials_independent_in_quotient(ideal, [Monomial.one(), X, XY])
    assert ok and witness is None
    ok, witness = monomials_independent_in_quotient(ideal, [X, X2])
    assert not ok and witness == X2


def test_order_ideal_sets():
    lower = OrderIdealSet("lower", [Monomial.one(), X, Y])
    assert lower.contains(X) and not lower.contains(XY)
    assert lower.is_closed()
    gappy = OrderIdealSet("lower", [Monomial.one(), XY])
    assert not gappy.is_closed()
    upper = OrderIdealSet("upper", [X2, XY])
    assert upper.contains(X2.mul(Y)) and not upper.contains(X)
    assert len(upper) == 2 and set(upper) == {X2, XY}
    with pytest.raises(BadParams):
        OrderIdealSet("sideways", [])


def test_minimal_generators():
    gens = minimal_generators([X2, X2.mul(Y), XY, XY.mul(XY)])
    assert gens == frozenset({X2, XY})


def _to_sympy(p, xs, sympy):
    total = sympy.Integer(0)
    for mono, coeff in p.terms.items():
        term = sympy.Rational(p.field.show(coeff))
        for v in mono.variables():
            term *= xs[v - 1] ** mono.exponent(v)
        total += term
    return sympy.expand(total)


def test_groebner_matches_independent_library():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(2026)
    F = Q_FIELD
    trials = 0
    while trials < 12:
        nvars = rng.choice((2, 3))
        gens = []
        for v in range(1, nvars + 1):
            if rng.random() < 0.7:
                power = Monomial.variable(v, rng.randint(1, 3))
                gens.append(Polynomial.from_monomial(F, nvars, power))
        for _ in range(rng.randint(1, 2)):
            terms = {}
            for mono in monomials_of_degree(nvars, rng.randint(1, 2)):
                c = rng.randint(-2, 2)
                if c:
                    terms[mono] = F.from_int(c)
            if terms:
                gens.append(Polynomial(F, nvars, terms))
        if not gens:
            continue
        trials += 1
        order = rng.choice(("grlex", "lex", "grevlex"))
        ours = groebner_basis(Ideal.make(F, nvars, gens), order)
        xs = sympy.symbols(f"x1:{nvars + 1}")
        theirs = sympy.groebner(
            [_to_sympy(p, xs, sympy) for p in gens], *xs, order=order
        )
        # reduced Groebner bases are unique for a fixed order once made monic
        # (sympy scales to primitive integer coefficients instead)
        monic = {
            sympy.expand(e / sympy.LC(e, *xs, order=order))
            for e in theirs.exprs
        }
        assert {_to_sympy(p, xs, sympy) for p in ours} == monic, order
