import itertools

import pytest

from qcenter import rootdata
from qcenter.charring import c_basis
from qcenter.repchar import freudenthal, weyl_dim
from qcenter.ring import Q, qpow, quantum_int
from qcenter.rootdata import root_lattice_ball
from qcenter.uq import E, F, K, UElement
from qcenter.verma import (
    TruncationError, build_weyl_module, check_relations, dims_csv, theta_pairing, trace_against, verify_theta,
)


def dominant_weights(rd, h):
    return [lam for lam in itertools.product(range(h + 1), repeat=rd.rank) if sum(lam) <= h]


def test_rank_one_examples(A1):
    m = build_weyl_module(A1, (1,))
    assert m.dims() == {(1,): 1, (-1,): 1}
    assert m.spaces[(-1,)].gram == [[1]]
    m2 = build_weyl_module(A1, (2,))
    assert m2.spaces[(0,)].gram == [[quantum_int(2)]]


def test_rho_module(A2):
    m = build_weyl_module(A2, (1, 1))
    assert m.dims() == freudenthal(A2, (1, 1)).mults
    assert m.dim() == 8 and m.dim((0, 0)) == 2


@pytest.mark.parametrize("label,h", [("A1", 5), ("A2", 3), ("B2", 2), ("G2", 1)])
def test_modules_match_freudenthal_and_relations(label, h):
    rd = rootdata.build(label)
    for lam in dominant_weights(rd, h):
        m = build_weyl_module(rd, lam)
        assert m.dims() == freudenthal(rd, lam).mults
        assert m.dim() == weyl_dim(rd, lam)
        rel = check_relations(m)
        assert all(rel.values()), (lam, rel)


def test_traces(A1):
    m = build_weyl_module(A1, (1,))
    assert trace_against(m, UElement.one()) == Q + Q ** -1
    # u = k_alpha: sum over nu = +-w of q^{(nu, alpha) - 2 (nu, rho)} = 1 + 1
    assert trace_against(m, UElement.word(K((2,)))) == 2
    assert trace_against(m, UElement()) == 0


def test_theta_examples(A1, A2):
    probes = [UElement.word(K(mu)) for mu in [(0,), (2,), (4,)]]
    assert verify_theta(A1, (1,), probes)
    assert verify_theta(A1, (0,), probes)
    assert verify_theta(A2, (1, 0), [UElement.word(K(A2.simple_root(i))) for i in range(2)])


def test_theta_general_probe(B2):
    # combinations of Cartan monomials are fine too
    lam = (1, 1)
    m = build_weyl_module(B2, lam)
    c = c_basis(B2, lam)
    u = UElement.word(K(B2.simple_root(0))).scale(Q) + UElement.word(K(B2.simple_root(1))).scale(3)
    assert trace_against(m, u) == theta_pairing(B2, c, u)


def test_theta_rejects_non_cartan(A1):
    with pytest.raises(ValueError):
        theta_pairing(A1, c_basis(A1, (1,)), UElement.word(E(0)))


def test_theta_full_ball(A2):
    probes = [UElement.word(K(mu)) for mu in root_lattice_ball(A2, 3)]
    assert verify_theta(A2, (2, 1), probes)


def test_operator_words(A1):
    m = build_weyl_module(A1, (3,))
    # e f on the highest weight vector is [3]
    tgt, mat = m.apply_word((E(0), F(0)), (3,))
    assert tgt == (3,) and mat == [[quantum_int(3)]]
    # f^5 leaves the module through the empty space at -5
    tgt, mat = m.apply_word((F(0),) * 5, (3,))
    assert tgt == (-7,) and mat == []
    # f^(3) = f^3 / [3]!
    _, plain = m.apply_word((F(0),) * 3, (3,))
    _, div = m.apply_word((F(0, 3),), (3,))
    assert div[0][0] * quantum_int(3) * quantum_int(2) == plain[0][0]


def test_depth_cap(A2):
    with pytest.raises(TruncationError):
        build_weyl_module(A2, (2, 2), depth_cap=2)


def test_csv(A1):
    out = dims_csv(build_weyl_module(A1, (1,)))
    assert out.splitlines()[0] == "weight,dim,gram_det"
    assert '"-1",1,1' in out


def test_k_eigen(G2):
    m = build_weyl_module(G2, (1, 0))
    for nu in m.spaces:
        assert m.k_eigen(G2.simple_root(0), nu) == qpow(int(G2.form(nu, G2.simple_root(0))))
