"""Wedge algebra, Wirtinger operators, and Levi determinant extraction."""

import random
from itertools import combinations

import pytest

from kohnalg.forms import (Form, d_antiholo, d_antiholo_form, d_holo,
                           d_holo_form, ddbar, levi_determinants, wedge_many,
                           wedge_power)
from kohnalg.parser import parse_expression
from kohnalg.poly import Poly

from oracles import bordered_hessian_determinant, random_poly


def pe(text, n):
    return parse_expression(text, n)


def dz(n, i):
    return Form(n, {((i,), ()): Poly.one(n)})


def dzbar(n, i):
    return Form(n, {((), (i,)): Poly.one(n)})


def random_form(rng, n, p, q, coeff_degree=2, terms=3):
    holos = list(combinations(range(1, n + 1), p))
    antis = list(combinations(range(1, n + 1), q))
    acc = {}
    for _ in range(terms):
        basis = (rng.choice(holos), rng.choice(antis))
        coeff = random_poly(rng, n, coeff_degree, 2)
        if basis in acc:
            coeff = acc[basis] + coeff
        if coeff.is_zero():
            acc.pop(basis, None)
        else:
            acc[basis] = coeff
    return Form(n, acc)


def test_wedge_basics():
    n = 2
    a, b = dz(n, 1), dz(n, 2)
    assert a.wedge(b) == Form(n, {((1, 2), ()): Poly.one(n)})
    assert b.wedge(a) == -a.wedge(b)
    assert a.wedge(a).is_zero()
    # dzbar passes the dz block with a sign
    assert dzbar(n, 1).wedge(dz(n, 1)) == -dz(n, 1).wedge(dzbar(n, 1))


def test_scalar_form_is_identity():
    n = 2
    one = Form.scalar(n, Poly.one(n))
    w = dz(n, 1).wedge(dzbar(n, 2))
    assert one.wedge(w) == w
    assert w.wedge(one) == w
    assert wedge_power(w, 0) == one


def test_operator_examples():
    r = pe("2*Re(z2) + abs2(z1)", 2)
    assert d_holo(r) == Form(2, {((1,), ()): Poly.zbar(2, 1), ((2,), ()): Poly.one(2)})
    assert d_antiholo(r) == Form(2, {((), (1,)): Poly.z(2, 1), ((), (2,)): Poly.one(2)})
    assert ddbar(r) == Form(2, {((1,), (1,)): Poly.one(2)})
    assert ddbar(pe("2*Re(z2)", 2)).is_zero()


def test_bidegree_and_collapse():
    n = 2
    w = dz(n, 1).wedge(dz(n, 2)).wedge(dzbar(n, 1)).wedge(dzbar(n, 2))
    assert w.bidegree() == (2, 2)
    # wedging any dz into a full-degree form collapses to zero
    assert w.wedge(dz(n, 1)).is_zero()
    assert Form.zero(n).bidegree() is None


def test_coefficients_order_is_deterministic():
    n = 3
    w = Form(n, {((2,), (1,)): Poly.z(n, 1), ((1,), (3,)): Poly.z(n, 2)})
    assert w.cobases() == [((1,), (3,)), ((2,), (1,))]
    assert w.coefficients() == [Poly.z(n, 2), Poly.z(n, 1)]


def test_levi_determinants_bundled():
    dets = levi_determinants(pe("2*Re(z2) + abs2(z1)", 2), 1)
    assert [d.to_text() for d in dets] == ["-1"]
    dets = levi_determinants(pe("2*Re(z2) + abs2(z1)^2", 2), 1)
    assert [d.to_text() for d in dets] == ["-4*z1*zbar1"]
    assert levi_determinants(pe("2*Re(z2)", 2), 1) == []
    dets = levi_determinants(pe("2*Re(z3) + abs2(z1)^2 + abs2(z2)^2", 3), 1)
    assert [d.to_text() for d in dets] == ["-32*z1*z2*zbar1*zbar2"]


def test_levi_determinants_level_two():
    r = pe("2*Re(z3) + abs2(z1) + abs2(z2)", 3)
    dets = levi_determinants(r, 2)
    texts = sorted(d.to_text() for d in dets)
    assert "-1" in texts
    assert len(dets) == 7


def test_levi_determinants_with_multipliers():
    r = pe("2*Re(z2) + abs2(z1)^2", 2)
    dets = levi_determinants(r, 1, (Poly.z(2, 1),))
    assert [d.to_text() for d in dets] == ["2*z1^2*zbar1", "1"]


def test_levi_errors():
    r = pe("2*Re(z2) + abs2(z1)", 2)
    with pytest.raises(ValueError, match="q out of range"):
        levi_determinants(r, 2)
    with pytest.raises(ValueError, match="q out of range"):
        levi_determinants(r, 0)
    with pytest.raises(ValueError, match="tuple too long for level q"):
        levi_determinants(r, 1, (Poly.z(2, 1), Poly.z(2, 2)))


def test_wedge_anticommutativity():
    rng = random.Random(301)
    for _ in range(200):
        n = 3
        pa, qa = rng.randint(0, 2), rng.randint(0, 2)
        pb, qb = rng.randint(0, 2), rng.randint(0, 2)
        a = random_form(rng, n, pa, qa)
        b = random_form(rng, n, pb, qb)
        ab = a.wedge(b)
        ba = b.wedge(a)
        if ((pa + qa) * (pb + qb)) % 2 == 0:
            assert ab == ba
        else:
            assert ab == -ba


def test_wedge_associativity():
    rng = random.Random(302)
    for _ in range(200):
        n = 3
        forms = [random_form(rng, n, rng.randint(0, 1), rng.randint(0, 1))
                 for _ in range(3)]
        a, b, c = forms
        assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


def test_operator_squares_vanish():
    rng = random.Random(303)
    for _ in range(200):
        n = rng.randint(1, 3)
        f = random_poly(rng, n, 4, 5)
        assert d_holo_form(d_holo(f)).is_zero()
        assert d_antiholo_form(d_antiholo(f)).is_zero()
        assert d_holo_form(d_antiholo(f)) == ddbar(f)
        assert d_antiholo_form(d_holo(f)) == -ddbar(f)


def test_ddbar_hermitian_for_real_input():
    rng = random.Random(304)
    for _ in range(100):
        n = rng.randint(2, 3)
        g = random_poly(rng, n, 3, 4)
        h = ddbar(g + g.conjugate())
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert h.coefficient((i,), (j,)) == h.coefficient((j,), (i,)).conjugate()


def test_wedge_power_matches_repeated_wedges():
    rng = random.Random(305)
    for _ in range(50):
        n = 3
        w = random_form(rng, n, 1, 1)
        assert wedge_power(w, 2) == w.wedge(w)
        assert wedge_power(w, 3) == w.wedge(w).wedge(w)


def test_levi_determinant_matches_bordered_hessian():
    """For q = 1 the single coefficient is +-(n-1)! times the bordered
    Hessian determinant, with a sign that depends only on n."""
    rng = random.Random(306)
    factorial = {2: 1, 3: 2}
    signs = {}
    checked = 0
    while checked < 10:
        n = rng.randint(2, 3)
        g = random_poly(rng, n, 3, 4)
        r = g + g.conjugate()
        dets = levi_determinants(r, 1)
        oracle = bordered_hessian_determinant(r) * factorial[n]
        if not dets:
            assert oracle.is_zero()
            continue
        assert len(dets) == 1
        if oracle.is_zero():
            assert dets[0].is_zero()
            continue
        if dets[0] == oracle:
            sign = 1
        else:
            assert dets[0] == -oracle
            sign = -1
        assert signs.setdefault(n, sign) == sign
        checked += 1
