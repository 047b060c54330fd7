import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcenter import rootdata
from qcenter.rootdata import (
    RootDataError, elementary_divisors, format_weight, fundamental_group_order, lattice_index,
    parse_weight, root_lattice_ball, weyl_orbit,
)

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"]


def test_counts():
    assert len(rootdata.build("A2").positive_roots) == 3
    assert rootdata.build("B2").weyl_order() == 8
    assert tuple(sorted(rootdata.build("G2").d)) == (1, 3)


@pytest.mark.parametrize("label,order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("D4", 192)])
def test_weyl_orders(label, order):
    rd = rootdata.build(label)
    assert rd.weyl_order() == order
    # enumeration agrees with the product of degrees
    assert len(rd.weyl_elements()) == order
    assert len(weyl_orbit(rd, rd.rho)) == order


@pytest.mark.parametrize("label,n", [("A1", 2), ("G2", 1), ("A2", 3), ("B2", 2), ("C3", 2), ("D4", 4), ("A4", 5)])
def test_fundamental_group(label, n):
    assert fundamental_group_order(rootdata.build(label)) == n


def test_orbits():
    A1 = rootdata.build("A1")
    A2 = rootdata.build("A2")
    assert weyl_orbit(A1, (1,)) == {(1,), (-1,)}
    assert len(weyl_orbit(A2, A2.rho)) == 6
    assert weyl_orbit(A2, (0, 0)) == {(0, 0)}


@pytest.mark.parametrize("label", TYPES)
def test_sum_of_positive_roots_is_two_rho(label):
    rd = rootdata.build(label)
    total = [0] * rd.rank
    for beta in rd.positive_root_weights:
        total = [a + b for a, b in zip(total, beta)]
    assert tuple(total) == tuple(2 * x for x in rd.rho)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_form_is_w_invariant(label):
    rd = rootdata.build(label)
    rng = random.Random(label)
    ws = rd.weyl_elements()
    for _ in range(100):
        w = rng.choice(ws)
        lam = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
        mu = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
        assert rd.form(w(lam), w(mu)) == rd.form(lam, mu)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "C3"])
def test_coroot_pairings_integral(label):
    rd = rootdata.build(label)
    for lam in root_lattice_ball(rd, 2) + [rd.fundamental_weights[i] for i in range(rd.rank)]:
        for beta in rd.positive_roots:
            assert Fraction(rd.pair_root_coroot(lam, beta)).denominator == 1


def test_short_root_normalisation():
    for label in ["B2", "C3", "G2"]:
        rd = rootdata.build(label)
        lengths = {rd.form(b, b) for b in rd.positive_root_weights}
        assert min(lengths) == 2


def test_dominant_reduction():
    rd = rootdata.build("B2")
    for lam in root_lattice_ball(rd, 3):
        dom, word = rd.to_dominant(lam)
        assert rd.is_dominant(dom)
        assert rd.act(word, lam) == dom


def test_longest_element():
    for label in ["A2", "B2", "G2"]:
        rd = rootdata.build(label)
        w0 = rd.longest_element()
        assert w0.length == len(rd.positive_roots)
        assert w0(rd.rho) == tuple(-x for x in rd.rho)


def test_group_law():
    rd = rootdata.build("G2")
    ws = rd.weyl_elements()
    rng = random.Random(1)
    for _ in range(30):
        a, b = rng.choice(ws), rng.choice(ws)
        assert (a * b)(rd.rho) == a(b(rd.rho))
        assert (a * a.inverse())(rd.rho) == rd.rho
        assert (a * b).sign() == a.sign() * b.sign()


def test_lattice_index():
    rd = rootdata.build("A2")
    assert lattice_index(rd, [(1, 0), (0, 1)]) == 1
    assert lattice_index(rd, [(2, 0), (0, 1)]) == 2
    assert lattice_index(rd, [(1, 1)]) == 0
    assert elementary_divisors([[2, 0], [0, 3]]) == [1, 6]


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_weight_roundtrip(coords):
    assert parse_weight(format_weight(coords)) == tuple(coords)


def test_bad_labels():
    for bad in ["X2", "B1", "G3", "A0", "E9", ""]:
        with pytest.raises(RootDataError):
            rootdata.build(bad)
    with pytest.raises(ValueError):
        parse_weight("1,a")


def test_d3_is_a3():
    assert rootdata.build("D3").weyl_order() == rootdata.build("A3").weyl_order()
    assert len(rootdata.build("D3").positive_roots) == 6
