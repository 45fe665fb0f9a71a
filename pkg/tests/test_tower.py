import random

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import ORACLE, ext_for
from helpers import random_element
from scaffoldkit import ExtensionSpec, build_extension, lambda_family
from scaffoldkit.errors import SpecError
from scaffoldkit.fq import GF
from scaffoldkit.series import TruncatedSeries, Valuation

TWO_STEP = [(p, (e1, e2)) for p, e1, e2 in oracles.TWO_STEP_CORPUS]
ALL = [(p, (e,)) for p, e in oracles.DEGREE_P_CORPUS] + TWO_STEP


@pytest.mark.parametrize("p,e", oracles.DEGREE_P_CORPUS)
def test_degree_p_matches_frozen_and_live_oracles(p, e):
    ext = ext_for(p, (e,))
    want = ORACLE["degree_p"][f"{p},{e}"]
    live = oracles.DegreePModel(p, e).ramification()
    assert want["breaks"] == live["breaks"] and want["d"] == live["d"]
    r = ext.ramification
    assert list(r.breaks) == want["breaks"]
    assert r.d == want["d"] == oracles.classical_degree_p(p, e)["d"]
    assert r.i0 == want["i0"]
    assert sorted(r.ig.values()) == sorted(want["ig"])
    assert ext.digits.b(ext.P - 1) == r.i0


@pytest.mark.parametrize("p,es", TWO_STEP)
def test_two_step_matches_herbrand_oracle(p, es):
    ext = ext_for(p, es)
    want = ORACLE["two_step"][f"{p},{es[0]},{es[1]}"]
    assert want == oracles.herbrand_two_step(p, *es)
    r = ext.ramification
    assert list(r.breaks) == want["breaks"]
    assert (r.d, r.i0) == (want["d"], want["i0"])
    assert ext.digits.b(ext.P - 1) == r.i0


@pytest.mark.parametrize("p,e", oracles.DEGREE_P_CORPUS)
def test_generator_valuation_from_newton_polygon(p, e):
    ext = ext_for(p, (e,))
    assert ext.gen(1).val() == Valuation.Exact(ORACLE["degree_p"][f"{p},{e}"]["v_x"])
    assert ORACLE["degree_p"][f"{p},{e}"]["v_x"] == -e


def test_small_examples():
    ext = ext_for(3, (1,))
    assert ext.P == 3
    assert ext.gen(1).val() == Valuation.Exact(-1)
    assert ext.t().val() == Valuation.Exact(3)
    assert ext.one().val() == Valuation.Exact(0)
    x = ext.gen(1)
    assert ext.uniformizer == x * x * ext.t()
    ext2 = ext_for(2, (1,))
    assert ext2.uniformizer == ext2.gen(1) * ext2.t()
    assert ext2.ramification.breaks == (1,)
    assert (ext2.ramification.d, ext2.i0) == (2, 1)
    ext4 = ext_for(2, (1, 5))
    assert ext4.ramification.breaks == (1, 9)
    assert ext4.i0 % 4 == 3
    assert all((b + ext4.i0) % 4 == 0 for b in ext4.ramification.breaks)


def test_spec_validation():
    with pytest.raises(SpecError):
        build_extension(ExtensionSpec(3, 1, ()))
    with pytest.raises(SpecError):
        build_extension(ExtensionSpec.simple(3, [3]))
    with pytest.raises(SpecError):
        build_extension(ExtensionSpec.simple(3, [1], us=[[0, 1]]))


@pytest.mark.parametrize("p,es", [(2, (1,)), (3, (1,)), (3, (2,)), (5, (3,)), (2, (1, 5)), (3, (1, 2))])
def test_valuation_agrees_with_determinant_and_norm(p, es):
    ext = ext_for(p, es)
    rng = random.Random(p * 100 + sum(es))
    for _ in range(6):
        y = random_element(ext, rng, density=0.4)
        if y.is_zero():
            continue
        v = y.val().require_exact()
        nrm = ext.norm(y)
        assert nrm.val() == Valuation.Exact(v)
        cols = [(y * ext.basis_monomial(j)).coords for j in range(ext.P)]
        matrix = [[cols[j][i].terms() for j in range(ext.P)] for i in range(ext.P)]
        assert oracles.det_valuation(matrix, p) == v


@pytest.mark.parametrize("p,es", [(2, (1,)), (3, (1,)), (5, (2,)), (2, (1, 5)), (3, (1, 2))])
def test_valuation_is_additive(p, es):
    ext = ext_for(p, es)
    rng = random.Random(7)
    for _ in range(10):
        y, z = random_element(ext, rng), random_element(ext, rng)
        if y.is_zero() or z.is_zero():
            continue
        assert (y * z).val() == Valuation.Exact(y.val().value + z.val().value)
    s = TruncatedSeries.from_dict(ext.F, {2: 1, 3: 1})
    assert ext.from_base(s).val() == Valuation.Exact(2 * ext.P)


@pytest.mark.parametrize("p,es", ALL)
def test_lambda_family_valuations(p, es):
    ext = ext_for(p, es)
    for kind in ("pi", "monomial"):
        lam = lambda_family(ext, kind)
        assert lam(0) == ext.one()
        assert lam(ext.P) == ext.t()
        for t in range(-2 * ext.P, 2 * ext.P + 1):
            assert lam(t).val() == Valuation.Exact(t)
        ratio = lam(ext.P + 1) * lam(1).inverse()
        assert ratio.in_base() == TruncatedSeries.monomial(ext.F, 1)


@pytest.mark.parametrize("p,es", [(2, (1,)), (3, (1,)), (5, (2,)), (2, (1, 5)), (3, (1, 2))])
def test_action_is_faithful_group_action_of_ring_automorphisms(p, es):
    ext = ext_for(p, es)
    rng = random.Random(3)
    G = ext.group()
    y, z = random_element(ext, rng), random_element(ext, rng)
    c = ext.from_base(TruncatedSeries.from_dict(ext.F, {-1: 1, 2: 1}))
    images = set()
    for s in G:
        sy = ext.apply_automorphism(s, y)
        assert ext.apply_automorphism(s, y * z) == sy * ext.apply_automorphism(s, z)
        assert ext.apply_automorphism(s, y + z) == sy + ext.apply_automorphism(s, z)
        assert ext.apply_automorphism(s, c) == c
        for s2 in G[:3]:
            assert ext.apply_automorphism(s2, sy) == ext.apply_automorphism(ext.compose(s2, s), y)
        images.add(tuple(tuple(sorted(k.terms().items())) for k in ext.apply_automorphism(s, ext.uniformizer).coords))
    assert len(images) == ext.P
    assert ext.apply_automorphism(ext.identity(), y) is y
    for j in range(1, ext.n + 1):
        s = tuple(1 if i == j - 1 else 0 for i in range(ext.n))
        orbit, x = [], ext.gen(j)
        for _ in range(p):
            orbit.append(x)
            x = ext.apply_automorphism(s, x)
        assert x == ext.gen(j)
        assert all(not (orbit[a] == orbit[b]) for a in range(p) for b in range(a))
        assert ext.apply_automorphism(s, ext.gen(j)) == ext.gen(j) + ext.one()


def test_order_two_at_p2():
    ext = ext_for(2, (1,))
    x = ext.gen(1)
    once = ext.apply_automorphism((1,), x)
    assert once == x + ext.one()
    assert ext.apply_automorphism((1,), once) == x


@pytest.mark.parametrize("p,es", [(2, (1, 5)), (3, (1, 2)), (3, (2,))])
def test_x_basis_roundtrip(p, es):
    ext = ext_for(p, es)
    rng = random.Random(11)
    for _ in range(4):
        y = random_element(ext, rng)
        assert ext.from_x_coordinates(ext.x_coordinates(y)) == y


@pytest.mark.parametrize("p,es", [(3, (1,)), (2, (1, 5)), (5, (1,))])
def test_generators_satisfy_defining_equation(p, es):
    ext = ext_for(p, es)
    for j, e in enumerate(es, 1):
        x = ext.gen(j)
        rhs = ext.from_base(TruncatedSeries.monomial(ext.F, -e))
        assert x**p - x == rhs


@pytest.mark.parametrize("p,es", [(3, (1,)), (2, (1, 5)), (3, (1, 2))])
def test_inverse_roundtrip(p, es):
    ext = ext_for(p, es)
    rng = random.Random(5)
    for _ in range(4):
        y = random_element(ext, rng)
        if y.is_zero():
            continue
        prod = y * y.inverse()
        assert prod == ext.one()
        assert (prod - ext.one()).val().value >= 1


@given(st.sampled_from([(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)]), st.data())
def test_units_and_field_extensions(pm, data):
    p, m = pm
    F = GF(p, m)
    e = data.draw(st.integers(1, 5).filter(lambda k: k % p))
    lead = data.draw(st.integers(1, F.q - 1))
    tail = data.draw(st.lists(st.integers(0, F.q - 1), max_size=2))
    ext = build_extension(ExtensionSpec.simple(p, [e], us=[[lead] + tail], m=m), cap=24)
    assert ext.ramification.breaks == (e,)
    assert ext.ramification.d == (p - 1) * (e + 1)


@pytest.mark.parametrize("p,es", [(2, (1,)), (3, (2,)), (5, (1,)), (2, (1, 5)), (3, (1, 2)), (2, (1, 3, 5))])
def test_dense_kernels_agree_with_series_arithmetic(p, es):
    from scaffoldkit.tower import ExtElement

    ext = ext_for(p, es)
    rng = random.Random(11)
    for _ in range(6):
        y, z = random_element(ext, rng), random_element(ext, rng)
        slow = ExtElement(ext, ext._mul(y.coords, z.coords, ext.n))
        assert y * z == slow
        for s in ext.group()[1:4]:
            cols = ext.sigma_matrix(s)
            out = [TruncatedSeries.zero(ext.F)] * ext.P
            for j, c in enumerate(z.coords):
                for i in range(ext.P):
                    out[i] = out[i] + cols[j][i] * c
            assert ext.apply_automorphism(s, z) == ExtElement(ext, out)
