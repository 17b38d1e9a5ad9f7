import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from cupcube.algebra import FiniteGroup, GModule, QuotRing
from cupcube.branched import canonical, branched_form, branched_setup, free_generator, a_scale, knot_diagram
from cupcube.coloring import Representation, colorings, shadow_extend
from cupcube.harness import invariant_psis, make_setup, rmove_suite, s3_std
from cupcube.diagram import find_sites, parse_pd
from cupcube.oracles import (
    OracleError, oracle_fig8, oracle_torus_mm, oracle_trefoil, torus_kernel_violations,
)
from cupcube.trilinear import (
    PsiError, TrilinearPsi, canonical_scalar, cubic_tensor, diagonal_invariant, p_project,
    psi_check, scalars_equivalent, semilinear_orbit, tensors_equivalent, trilinear_sum, zn,
)

from conftest import TREFOIL


def spaces(name, n):
    D = knot_diagram(name)
    st_ = branched_setup(n)
    return D, st_, colorings(D, Representation.constant(D, st_.group, "t"), st_.module)


def test_psi0_is_invariant():
    for n in (2, 3, 4, 5, 6):
        st_ = branched_setup(n)
        assert psi_check(st_.psi0) is None
        assert psi_check(st_.psi) is None


def test_non_invariant_form_is_caught():
    st_ = branched_setup(5)
    R, M = st_.ring, st_.module
    basis = [R.one, R.t]
    # x p(y) p(z), valued in A
    psi = TrilinearPsi.from_function(
        (M, M, M), R, lambda i, j, k: basis[i] if j == k == 0 else R.zero)
    bad = psi_check(psi)
    assert bad is not None and bad["g"] == "t"
    assert psi_check(TrilinearPsi.zero((M, M, M), zn(5))) is None


def test_psi_needs_matching_modules():
    M2 = branched_setup(2).module
    M3 = branched_setup(3).module
    with pytest.raises(PsiError):
        TrilinearPsi.zero((M2, M3, M2), zn(2))


def test_zero_colorings_give_zero():
    D, st_, sp = spaces("4_1", 4)
    Z = shadow_extend(sp.coloring([0] * (2 * D.n_arcs)))
    assert trilinear_sum(Z, Z, Z, st_.psi0) == (0, 0)
    r = random.Random(0)
    for _ in range(20):
        x = sp.full.combine([r.randrange(o) for o in sp.full.orders])
        S = shadow_extend(sp.coloring(x))
        assert trilinear_sum(S, Z, S, st_.psi0) == (0, 0)


@given(st.sampled_from([("3_1", 2), ("4_1", 4), ("5_2", 5), ("6_1", 7)]), st.integers(0, 10 ** 9))
def test_trilinear_in_each_slot(case, seed):
    D, st_, sp = spaces(*case)
    r = random.Random(seed)
    n = st_.n

    def rand():
        return sp.full.combine([r.randrange(o) for o in sp.full.orders])

    def T(x, y, z):
        return trilinear_sum(*(shadow_extend(sp.coloring(v)) for v in (x, y, z)), st_.psi0)

    x, x2, y, z = rand(), rand(), rand(), rand()
    s = [(a + b) % n for a, b in zip(x, x2)]
    for slot in range(3):
        args = [y, y, z]
        a, b, c = list(args), list(args), list(args)
        a[slot], b[slot], c[slot] = s, x, x2
        lhs = T(*a)
        rhs = tuple((u + v) % n for u, v in zip(T(*b), T(*c)))
        assert lhs == rhs


@pytest.mark.parametrize("name, n", [("3_1", 2), ("4_1", 4), ("5_2", 5)])
def test_independent_of_unbounded_face(name, n):
    D, st_, sp = spaces(name, n)
    forms = {tuple(sorted(cubic_tensor((sp,) * 3, st_.psi, unbounded=f).tensor.items()))
             for f in range(len(D.faces))}
    assert len(forms) == 1


def test_diagonal_trefoil_is_cube():
    D, st_, sp = spaces("3_1", 2)
    R = st_.ring
    e = free_generator(sp, R)
    for a in R.elements():
        S = shadow_extend(sp.coloring(a_scale(sp, R, e, a)))
        assert diagonal_invariant(S, st_.psi) == ((a * a * a).coeffs[0],)


def test_diagonal_refuses_mixed_modules():
    G, M = s3_std(3)
    sign = GModule.from_generators(G, 3, 1, {"s": [[2]], "c": [[1]]})
    psi = TrilinearPsi.zero((M, M, sign), zn(3))
    D = parse_pd(TREFOIL)
    st_ = branched_setup(3)
    S = shadow_extend(colorings(D, Representation.constant(D, st_.group, "t"),
                                st_.module).coloring([0] * 6))
    with pytest.raises(PsiError):
        diagonal_invariant(S, psi)


def test_semilinear_orbit():
    R = QuotRing(5)
    lam = R(1, 1)
    orbit = semilinear_orbit(lam)
    assert R.t * lam in orbit and R.galois(lam) in orbit
    assert scalars_equivalent(lam, R(2, 2))
    assert not scalars_equivalent(lam, R.zero)
    assert canonical(R(0, 3))[0] == R(1)
    assert canonical_scalar(R(0, 3))[0] == R(0, 1)
    assert canonical_scalar(R.zero) == (R.zero, 1)


def test_tensor_equivalence_under_basis_change():
    D, st_, sp = spaces("3_1", 2)
    F = cubic_tensor((sp,) * 3, st_.psi)
    # same module, second diagram: bases differ but forms must be equivalent
    D2 = knot_diagram("3_1", alt=True)
    sp2 = colorings(D2, Representation.constant(D2, st_.group, "t"), st_.module)
    F2 = cubic_tensor((sp2,) * 3, st_.psi)
    assert tensors_equivalent(F, F2) is True
    Z = cubic_tensor((sp,) * 3, TrilinearPsi.zero(st_.psi.modules, zn(2)))
    assert tensors_equivalent(F, Z) is False


def test_branched_examples():
    assert branched_form(knot_diagram("3_1"), 2).label() == "a*b*c"
    assert branched_form(knot_diagram("5_1"), 3).is_zero
    for n in range(2, 10):
        assert branched_form(knot_diagram("6_2"), n).is_zero


def test_invariant_psis_are_invariant():
    G, M = s3_std(3)
    psis = invariant_psis((M, M, M), zn(3))
    assert len(psis) == 2
    assert all(psi_check(p) is None for p in psis)


# -- oracles ---------------------------------------------------------------------

def test_trefoil_oracle_vanishes_on_diagonal():
    st_ = branched_setup(4)
    t = st_.group.element("t")
    x = [1, 3]
    assert oracle_trefoil([(x, x)] * 3, t, t, st_.psi0) == (0, 0)


def test_trefoil_oracle_branched_n2_is_product():
    st_ = branched_setup(2)
    R, M = st_.ring, st_.module
    t = st_.group.element("t")
    for a, b, c in product(R.elements(), repeat=3):
        cols = [(list(a.coeffs), [0, 0]), (list(b.coeffs), [0, 0]), (list(c.coeffs), [0, 0])]
        assert oracle_trefoil(cols, t, t, st_.psi0) == (a * b * c).coeffs


def test_trefoil_oracle_rejects_non_colorings():
    st_ = branched_setup(3)
    t = st_.group.element("t")
    with pytest.raises(OracleError):
        oracle_trefoil([([1, 0], [0, 0])] * 3, t, t, st_.psi0)


def test_fig8_oracle_vanishes_when_arcs_agree():
    st_ = branched_setup(4)
    t = st_.group.element("t")
    assert oracle_fig8([([1, 2], [1, 2])] * 3, t, t, st_.psi0) == (0, 0)


def test_torus_oracle_zero_first_slot():
    st_ = branched_setup(2)
    t = st_.group.element("t")
    M = st_.module
    w = [[0, 0]] * 3
    x = [[1, 0], [1, 0], [1, 0]]
    assert torus_kernel_violations(M, x, [t] * 3) == []
    assert oracle_torus_mm(w, x, x, [t] * 3, st_.psi0) == (0, 0)


def test_rmove_suite_catches_a_wrong_convention():
    from cupcube.trilinear import Convention
    # incoming under-arc and source corner at both signs
    wrong = Convention("in", ("in", "in"), "in", ("in", "in"), name="source")
    D = parse_pd(TREFOIL)
    S = make_setup("s3std:3")
    f = S.representation(D)
    sites = find_sites(D, 2)
    assert rmove_suite(D, f, S.modules, S.psis, sites, samples=10).passed
    assert not rmove_suite(D, f, S.modules, S.psis, sites, conv=wrong, samples=10).passed
