import pytest

from scaffoldkit.fq import CONWAY, GF

FIELDS = sorted(CONWAY)


@pytest.mark.parametrize("p,m", FIELDS)
def test_generator_is_primitive(p, m):
    F = GF(p, m)
    g = F.gen()
    x = F(1)
    seen = set()
    for _ in range(F.q - 1):
        seen.add(x.code)
        x = x * g
    assert x == F(1)
    assert len(seen) == F.q - 1


@pytest.mark.parametrize("p,m", FIELDS)
def test_generator_is_root_of_pinned_modulus(p, m):
    F = GF(p, m)
    g = F.gen()
    acc = F(0)
    for k, c in enumerate(CONWAY[(p, m)]):
        acc = acc + F.from_int(c) * g**k
    assert acc.is_zero()


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)])
def test_field_axioms(p, m):
    F = GF(p, m)
    xs = F.elements()
    zero, one = F(0), F(1)
    for a in xs:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        assert a - a == zero
        if not a.is_zero():
            assert a * a.inverse() == one
            assert a / a == one
    small = xs[:9]
    for a in small:
        for b in small:
            assert a + b == b + a
            assert a * b == b * a
            for c in small:
                assert (a + b) * c == a * c + b * c
                assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("p,m", FIELDS)
def test_frobenius_is_additive_and_multiplicative(p, m):
    F = GF(p, m)
    xs = F.elements()
    for a in xs:
        for b in xs[:7]:
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    assert len({a.frobenius().code for a in xs}) == F.q
    for k in range(p):
        c = F(F.from_int(k))
        assert c.frobenius() == c


@pytest.mark.parametrize("p,m", FIELDS)
def test_pth_root_inverts_frobenius(p, m):
    F = GF(p, m)
    for c in range(F.q):
        assert F.pth_root(F.pow(c, p)) == c


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        GF(4, 1)
    with pytest.raises(ValueError):
        GF(11, 5)
    with pytest.raises(ZeroDivisionError):
        GF(3).inv(0)


def test_fields_are_shared():
    assert GF(3, 2) is GF(3, 2)
