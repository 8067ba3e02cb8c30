"""Ring construction, arithmetic, predicates, and ideal machinery."""

import pytest

from beckring import (
    CapacityError,
    DescriptorError,
    ElementError,
    InvalidModulusError,
    NotARingError,
    PreconditionError,
    field_factor_count,
    ideal_generate,
    ideal_power,
    ideal_product,
    make_anderson_naseer,
    make_product,
    make_quotient,
    make_structure_ring,
    make_zmod,
)
from beckring.catalog import catalog_rings


def test_zmod_basics():
    r = make_zmod(12)
    assert r.size == 12
    assert r.unity == 1
    assert r.mul(4, 3) == 0
    assert r.add(7, 8) == 3
    assert r.neg(5) == 7


def test_zmod_zero_ring():
    r = make_zmod(1)
    assert r.size == 1
    assert r.unity == 0
    assert r.mul(0, 0) == 0


def test_zmod_invalid_modulus():
    with pytest.raises(InvalidModulusError):
        make_zmod(0)


def test_zmod_size_cap():
    with pytest.raises(CapacityError):
        make_zmod(5000)


def test_z4_unique_nonzero_nilpotent():
    r = make_zmod(4)
    # exhaustive multiplication table: 2 is the only nonzero x with x^2 = 0
    square_zero = [a for a in r.elements() if r.mul(a, a) == 0]
    assert square_zero == [0, 2]
    assert [a for a in r.elements() if r.is_nilpotent(a)] == [0, 2]


def test_product_componentwise():
    r = make_product([make_zmod(2), make_zmod(2)])
    a = r.encode((1, 0))
    b = r.encode((0, 1))
    assert r.mul(a, b) == r.encode((0, 0)) == 0
    assert r.element_str(a) == "(1,0)"


def test_product_empty_rejected():
    with pytest.raises(DescriptorError):
        make_product([])


def test_product_capacity():
    with pytest.raises(CapacityError):
        make_product([make_zmod(100), make_zmod(100)])


def test_product_encoding_factor1_fastest():
    r = make_product([make_zmod(4), make_zmod(3)])
    # index = a1 + 4 * a2
    assert r.encode((3, 2)) == 11
    assert r.decode(5) == (1, 1)
    assert r.encode((0, 0)) == 0


def test_product_projection_recovers_factor_arithmetic():
    f1, f2 = make_zmod(4), make_zmod(3)
    r = make_product([f1, f2])
    for a in r.elements():
        for b in r.elements():
            pa, pb = r.decode(a), r.decode(b)
            assert r.decode(r.mul(a, b)) == (f1.mul(pa[0], pb[0]), f2.mul(pa[1], pb[1]))
            assert r.decode(r.add(a, b)) == (f1.add(pa[0], pb[0]), f2.add(pa[1], pb[1]))


def test_element_index_out_of_range():
    r = make_zmod(6)
    with pytest.raises(ElementError):
        r.mul(6, 0)
    with pytest.raises(ElementError):
        r.add(0, -1)


def test_structure_ring_z4_adjoin_sqrt2():
    # basis {1, t} over (4, 4) with t*t = 2: Z4[t]/(t^2 - 2), 16 elements
    r = make_quotient(4, (-2, 0, 1))
    assert r.size == 16
    r.validate()
    t = r.encode((0, 1))
    assert r.mul(t, t) == r.encode((2, 0))


def test_structure_ring_dual_numbers():
    r = make_quotient(2, (0, 0, 1))  # Z2[t]/(t^2)
    assert r.size == 4
    t = r.encode((0, 1))
    assert r.mul(t, t) == 0
    nil = r.nilradical()
    assert sorted(nil.ideal.elements) == [0, t]
    assert nil.index_of_nilpotency == 2


def test_structure_ring_missing_table_entry():
    with pytest.raises(DescriptorError):
        make_structure_ring((2, 2), (1, 0), {(0, 0): (1, 0), (0, 1): (0, 1)})


def test_structure_ring_associativity_violation():
    # u*u = v, u*v = 1, v*v = 0 breaks (uu)v = u(uv)
    products = {
        (0, 0): (1, 0, 0),
        (0, 1): (0, 1, 0),
        (0, 2): (0, 0, 1),
        (1, 1): (0, 0, 1),
        (1, 2): (1, 0, 0),
        (2, 2): (0, 0, 0),
    }
    with pytest.raises(NotARingError) as exc:
        make_structure_ring((2, 2, 2), (1, 0, 0), products)
    assert exc.value.axiom in ("associativity", "distributivity")


def test_structure_ring_unity_violation():
    products = {(0, 0): (1, 0), (0, 1): (1, 0), (1, 1): (0, 0)}
    with pytest.raises(NotARingError):
        make_structure_ring((2, 2), (1, 0), products)


def test_anderson_naseer_variants():
    for z2 in (0, 2):
        r = make_anderson_naseer(z2)
        assert r.size == 32
        r.validate()
        assert int(r.unit_mask.sum()) == 16
        assert r.is_local()
        # units are exactly the elements with odd constant coordinate
        for a in r.elements():
            assert r.is_unit(a) == (r.coords(a)[0] % 2 == 1)
    with pytest.raises(DescriptorError):
        make_anderson_naseer(1)


def test_anderson_naseer_relations():
    r = make_anderson_naseer(0)
    x, y, z = r.encode((0, 1, 0, 0)), r.encode((0, 0, 1, 0)), r.encode((0, 0, 0, 1))
    two = r.encode((2, 0, 0, 0))
    assert r.mul(x, y) == 0
    assert r.mul(x, z) == 0
    assert r.mul(x, x) == two
    assert r.mul(y, y) == two
    assert r.mul(y, z) == two
    assert r.mul(z, z) == 0
    assert make_anderson_naseer(2).mul(z, z) == two


@pytest.mark.parametrize("n,zd,unit", [(12, 6, 5), (12, 2, 7), (8, 6, 3)])
def test_zero_divisor_and_unit_predicates(n, zd, unit):
    r = make_zmod(n)
    assert r.is_zero_divisor(zd)
    assert not r.is_unit(zd)
    assert r.is_unit(unit)
    assert not r.is_zero_divisor(unit)


def test_nilpotent_power_iteration():
    r = make_zmod(8)
    assert r.is_nilpotent(2)
    assert r.is_nilpotent(6)  # 6^3 = 216 = 0 mod 8
    assert not r.is_nilpotent(3)
    assert r.is_nilpotent(0)


@pytest.mark.parametrize(
    "n,members,index,sizes",
    [
        (4, [0, 2], 2, (2, 1)),
        (8, [0, 2, 4, 6], 3, (4, 2, 1)),
        (6, [0], 1, (1,)),
    ],
)
def test_nilradical_profiles(n, members, index, sizes):
    prof = make_zmod(n).nilradical()
    assert sorted(prof.ideal.elements) == members
    assert prof.index_of_nilpotency == index
    assert prof.power_sizes == sizes


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_prime_power_nilradical(p, k):
    r = make_zmod(p**k)
    prof = r.nilradical()
    expected = sorted(range(0, p**k, p)) if k > 1 else [0]
    assert sorted(prof.ideal.elements) == expected
    assert prof.index_of_nilpotency == k


def test_ideal_generation_and_powers():
    r = make_zmod(8)
    i = ideal_generate(r, [2])
    assert sorted(i.elements) == [0, 2, 4, 6]
    assert sorted(ideal_power(i, 2).elements) == [0, 4]
    assert sorted(ideal_power(i, 3).elements) == [0]
    assert sorted(ideal_generate(r, [0]).elements) == [0]


def test_ideal_closure_properties():
    r = make_zmod(12)
    i = ideal_generate(r, [8])  # (8) = (4) in Z12
    els = i.elements
    for a in els:
        for b in els:
            assert r.add(a, b) in els
        for x in r.elements():
            assert r.mul(a, x) in els


def test_ideal_product_cross_ring_rejected():
    i = ideal_generate(make_zmod(8), [2])
    j = ideal_generate(make_zmod(4), [2])
    with pytest.raises(PreconditionError):
        ideal_product(i, j)


def test_is_local():
    assert make_zmod(4).is_local()
    assert not make_zmod(6).is_local()  # 2 + 3 = 5 is a unit
    assert make_anderson_naseer(0).is_local()
    assert not make_zmod(12).is_local()


def test_is_reduced_matches_nilpotency_index():
    for ring in catalog_rings().values():
        assert ring.is_reduced() == (ring.nilradical().index_of_nilpotency == 1)


def test_field_factor_count():
    assert field_factor_count(make_zmod(30)) == 3
    assert field_factor_count(make_zmod(7)) == 1
    assert field_factor_count(make_product([make_zmod(2), make_zmod(2)])) == 2
    with pytest.raises(PreconditionError):
        field_factor_count(make_zmod(4))


def test_field_factor_count_matches_prime_factors_of_squarefree_n():
    for n, k in [(2, 1), (6, 2), (10, 2), (15, 2), (30, 3), (105, 3), (210, 4)]:
        assert field_factor_count(make_zmod(n)) == k


def test_primitive_idempotents_of_z30():
    r = make_zmod(30)
    idem = [e for e in r.elements() if r.mul(e, e) == e]
    assert sorted(idem) == [0, 1, 6, 10, 15, 16, 21, 25]
    # the three primitive ones named by the factor decomposition
    for e in (6, 10, 15):
        assert e in idem


def test_catalog_rings_validate():
    for ring in catalog_rings().values():
        ring.validate()


def test_unit_count_matches_euler_phi():
    from math import gcd

    for n in (2, 6, 12, 30, 36):
        r = make_zmod(n)
        phi = sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
        assert int(r.unit_mask.sum()) == phi
