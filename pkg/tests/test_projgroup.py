"""Projective matrix groups over F_p: canonical representatives, PGL2/PSL2
enumeration, closures and centralizers."""
import pytest
from hypothesis import given, settings, strategies as st

from modtwist.arith import kronecker
from modtwist.projgroup import (
    Mat2,
    MatGroup,
    ProjMat,
    center,
    centralizer,
    closure,
    in_psl2,
    pgl2,
    proj_normalize,
    psl2,
    t_matrix,
    u_matrix,
    v_matrix,
)


def random_projmats(p):
    entries = st.integers(min_value=0, max_value=p - 1)

    def ok(t):
        a, b, c, d = t
        return (a * d - b * c) % p != 0

    return st.tuples(entries, entries, entries, entries).filter(ok).map(
        lambda t: ProjMat(*t, p)
    )


def test_mat2_arithmetic():
    m = Mat2(1, 2, 3, 4, 5)
    assert m.det == (1 * 4 - 2 * 3) % 5
    assert m * m.inv() == Mat2(1, 0, 0, 1, 5)
    assert m.transpose() == Mat2(1, 3, 2, 4, 5)
    with pytest.raises(ValueError):
        Mat2(1, 2, 2, 4, 5).inv()  # det 0


def test_projmat_canonical_representative():
    # first nonzero entry in row-major order is normalized to 1
    g = ProjMat(2, 4, 6, 8, 7)
    assert g.rep[0] == 1
    assert g == ProjMat(1, 2, 3, 4, 7)
    h = ProjMat(0, 3, 6, 0, 7)
    assert h.rep[0] == 0 and h.rep[1] == 1


def test_scalar_matrices_collapse():
    for p in (3, 5, 7):
        for lam in range(1, p):
            assert ProjMat(lam, 0, 0, lam, p).is_identity()


@given(st.sampled_from([3, 5, 7]), st.data())
def test_projmat_group_laws(p, data):
    g = data.draw(random_projmats(p))
    h = data.draw(random_projmats(p))
    assert g * g.inverse() == ProjMat.identity(p)
    assert (g * h).inverse() == h.inverse() * g.inverse()
    assert (g * h).det_class == g.det_class * h.det_class


@given(st.sampled_from([3, 5, 7]), st.data())
def test_hat_is_multiplicative_involution(p, data):
    g = data.draw(random_projmats(p))
    h = data.draw(random_projmats(p))
    assert g.hat().hat() == g
    assert (g * h).hat() == g.hat() * h.hat()
    # hat is conjugation by the antidiagonal matrix [[0, 1], [1, 0]]
    j = ProjMat(0, 1, 1, 0, p)
    assert g.hat() == j * g * j


@given(st.sampled_from([3, 5, 7]), st.data())
def test_det_class_constant_on_class(p, data):
    g = data.draw(random_projmats(p))
    lam = data.draw(st.integers(min_value=1, max_value=p - 1))
    a, b, c, d = g.rep
    scaled = ProjMat(a * lam, b * lam, c * lam, d * lam, p)
    assert scaled == g
    assert scaled.det_class == g.det_class
    assert g.det_class in (1, -1)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_group_orders(p):
    full = pgl2(p)
    half = psl2(p)
    assert full.order == p * (p * p - 1)
    assert half.order == full.order // 2
    assert half.elements <= full.elements
    assert all(in_psl2(g) for g in half.elements)
    assert sum(1 for g in full.elements if in_psl2(g)) == half.order


@pytest.mark.parametrize("p", [3, 5, 7])
def test_psl2_is_generated_by_t_and_u(p):
    grp = closure([t_matrix(p), u_matrix(p)])
    assert grp.order == psl2(p).order
    assert grp.elements == psl2(p).elements


@pytest.mark.parametrize("p", [3, 5, 7])
def test_v_matrix_adds_nonsquare_det(p):
    vv = v_matrix(p)
    assert vv.det_class == -1
    grp = closure([t_matrix(p), u_matrix(p), vv])
    assert grp.elements == pgl2(p).elements


def test_v_matrix_shape():
    # V = [[0, -v], [1, 0]] for the chosen non-square v
    vv = v_matrix(5, 3)
    assert vv == ProjMat(0, -3, 1, 0, 5)
    with pytest.raises(ValueError):
        v_matrix(5, 4)  # 4 is a square mod 5


@pytest.mark.parametrize("p", [3, 5, 7])
def test_element_orders_divide_group_order(p):
    full = pgl2(p)
    for g in full.elements:
        n = g.order()
        assert n >= 1
        assert g ** n == ProjMat.identity(p)
        assert full.order % n == 0


def test_negative_powers():
    g = t_matrix(7)
    assert g ** -1 == g.inverse()
    assert g ** -3 == (g ** 3).inverse()
    assert g ** 0 == ProjMat.identity(7)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_pgl2_center_is_trivial(p):
    assert center(pgl2(p)).order == 1
    assert center(psl2(p)).order == 1


@pytest.mark.parametrize("p", [3, 5])
def test_centralizer_properties(p):
    full = pgl2(p)
    # centralizer of the whole group is the center (trivial)
    assert centralizer(full.elements, p).order == 1
    # centralizer of a single non-identity element is a proper subgroup
    g = t_matrix(p)
    cen = centralizer([g], p)
    assert 1 < cen.order < full.order
    assert all(c * g == g * c for c in cen.elements)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_conjugacy_class_sizes(p):
    full = pgl2(p)
    seen = set()
    total = 0
    for g in sorted(full.elements):
        if g in seen:
            continue
        cls = full.conjugacy_class(g)
        assert full.order % len(cls) == 0  # orbit-stabilizer
        seen |= cls
        total += len(cls)
    assert total == full.order


@pytest.mark.parametrize("p", [3, 5, 7])
def test_involutions_are_order_two(p):
    full = pgl2(p)
    invs = full.involutions()
    for g in invs:
        assert g.order() == 2
    assert all(not g.is_identity() for g in invs)
