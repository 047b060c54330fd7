import itertools

import pytest

from qcenter import rootdata
from qcenter.center import (
    CentralCharData, NotInvariantError, brute_force_index, bullet_orbit, check_level, compatibility_witness,
    delta0, is_exceptional, is_regular, pair_compatible, point_order, prime_power_base, q0_index, xi_har,
)
from qcenter.charring import PChar, TorusPoint, act_bullet_torus, c_basis
from qcenter.rootdata import lattice_index
from qcenter.ring import ONE, Q, CycScalar, LaurentPoly, RatFunc, qpow


def chi(lam, c=1):
    return PChar.monomial(tuple(lam), "chi", c)


def test_xi_examples(A1, A2):
    z = Q + 1
    t = TorusPoint([z])
    assert xi_har(A1, t, c_basis(A1, (1,))) == RatFunc(qpow(-1) * z * z + Q, z)
    assert xi_har(A2, TorusPoint([Q + 2, Q - 3]), chi((0, 0))) == 1
    s = A1.element((0,))
    assert xi_har(A1, act_bullet_torus(A1, s, t), c_basis(A1, (1,))) == xi_har(A1, t, c_basis(A1, (1,)))


def test_xi_rejects_non_invariant(A1):
    with pytest.raises(NotInvariantError):
        xi_har(A1, TorusPoint([Q]), chi((1,)))


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_xi_constant_on_orbits(label):
    rd = rootdata.build(label)
    t = TorusPoint([Q + k + 1 for k in range(rd.rank)])
    for lam in itertools.product(range(5), repeat=rd.rank):
        if sum(lam) > 4:
            continue
        c = c_basis(rd, lam)
        base = xi_har(rd, t, c)
        for w in rd.weyl_elements():
            assert xi_har(rd, act_bullet_torus(rd, w, t), c) == base


def test_xi_multiplicative(A2):
    t = TorusPoint([Q + 2, qpow(2) - 1])
    a, b = c_basis(A2, (1, 0)), c_basis(A2, (0, 1))
    assert xi_har(A2, t, a * b) == xi_har(A2, t, a) * xi_har(A2, t, b)


def test_regular_examples(A1):
    assert not is_regular(A1, TorusPoint([Q]))
    assert not is_regular(A1, TorusPoint([-Q]))
    assert is_regular(A1, TorusPoint([qpow(-1)]))
    assert is_regular(A1, TorusPoint([qpow(3)]))
    # s.t has coordinate q^2 / q^3
    assert act_bullet_torus(A1, A1.element((0,)), TorusPoint([qpow(3)])) == TorusPoint([qpow(-1)])


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_regular_on_orbits(label):
    rd = rootdata.build(label)
    for t in [TorusPoint([Q, Q]), TorusPoint([Q + 1, Q]), TorusPoint([qpow(2), qpow(3)])]:
        orbit = bullet_orbit(rd, t)
        assert rd.weyl_order() % len(orbit) == 0
        reg = is_regular(rd, t)
        for p in orbit:
            assert is_regular(rd, p) == reg


def test_level_table():
    cases = {("G2", 9): ["a3"], ("A2", 9): ["a2"], ("A1", 25): [], ("A1", 15): ["a5"], ("A1", 4): ["a1", "a2"]}
    for (label, ell), reasons in cases.items():
        rep = check_level(rootdata.build(label), ell)
        assert rep.reasons == reasons
        assert rep.verdict == (not reasons)
        assert rep.a4 is None


def test_level_a1_table(A1):
    for ell in [3, 5, 7, 9, 25, 27]:
        assert check_level(A1, ell).verdict
    assert check_level(A1, 6).reasons == ["a1", "a2", "a5"]


def test_level_json(A2):
    data = check_level(A2, 9).to_json()
    assert data["verdict"] == "reject" and data["reasons"] == ["a2"]


def test_level_a4(A2):
    # h0 central of order 3: Q0 = Q
    h0 = TorusPoint([CycScalar(Q, 3), CycScalar(qpow(2), 3)])
    assert check_level(A2, 5, h0).a4 is True
    # h0 with Q0 of smaller rank fails a4
    h1 = TorusPoint([CycScalar(Q, 5), CycScalar(Q, 5)])
    assert q0_index(A2, h1) == 0
    assert check_level(A2, 7, h1).a4 is False


def test_level_needs_two():
    with pytest.raises(ValueError):
        check_level(rootdata.build("A1"), 1)


def test_prime_power_base():
    assert [prime_power_base(n) for n in [2, 4, 9, 12, 25, 1, 27, 49, 50]] == [2, 2, 3, None, 5, None, 3, 7, None]


def test_exceptional_examples(A1, B2):
    assert is_exceptional(A1, TorusPoint.identity(1))
    assert is_exceptional(A1, TorusPoint([LaurentPoly(-1)]))
    assert not is_exceptional(A1, TorusPoint([CycScalar(Q, 5)]))
    # in B2 the point -1 on the first fundamental weight keeps a rank 2 subsystem
    h0 = TorusPoint([LaurentPoly(-1), ONE])
    assert len(delta0(B2, h0)) in (4, 8)
    with pytest.raises(ValueError):
        is_exceptional(A1, TorusPoint([Q + 1]))


def test_compatible_examples(A1):
    t = TorusPoint([CycScalar(Q, 15)])
    assert compatibility_witness(A1, t, 3, TorusPoint([CycScalar(qpow(3), 15)])).length == 0
    w = compatibility_witness(A1, t, 3, TorusPoint([CycScalar(qpow(12), 15)]))
    assert w is not None and w.length == 1
    t2 = TorusPoint([CycScalar(qpow(7), 35)])
    assert not pair_compatible(A1, t2, 2, TorusPoint([CycScalar(qpow(5), 35)]))


def test_central_char_data(A2):
    t = TorusPoint([CycScalar(Q, 15), CycScalar(Q, 15)])
    h0 = TorusPoint([CycScalar(qpow(5), 15), CycScalar(qpow(10), 15)])
    data = CentralCharData.make(A2, t, h0, 5)
    assert data.order == point_order(h0) == 3
    assert data.index == 1 and data.exceptional()
    assert data.coefficient_level() == 15
    assert CentralCharData.make(A2, t, h0, 3).coefficient_level() is None
    # t^5 = (q^5, q^5) is not a Weyl conjugate of h0 = (q^5, q^10)
    assert not data.compatible()
    assert CentralCharData.make(A2, TorusPoint([CycScalar(Q, 15), CycScalar(qpow(2), 15)]), h0, 5).compatible()


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_index_matches_brute_force(label):
    rd = rootdata.build(label)
    roots = list(rd.positive_roots)
    for k in range(1, len(roots) + 1):
        for subset in itertools.combinations(roots, k):
            idx = lattice_index(rd, subset)
            if idx:
                assert brute_force_index(rd, subset) == idx
