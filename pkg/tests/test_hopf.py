import pytest
from hypothesis import given

from conftest import binary_delta_matroids
from oracles import literal_primitive_projection
from deltachroma.binary import enumerate_binary_delta_matroids
from deltachroma.hopf import (
    HopfElement,
    HopfError,
    TensorElement,
    character_xi,
    coproduct,
    primitive_projection,
    primitive_xi_value,
    reduced_coproduct,
    set_partitions,
    xi_composition,
)
from deltachroma.setsystem import UNIT, DeltaMatroid, SetSystem, product
from deltachroma.xpoly import ONE, X, ZERO, XPoly

EMPTY = DeltaMatroid(1, (0,))  # ({1}; {∅})
POINT = DeltaMatroid(1, (1,))  # ({1}; {{1}})
BOTH = DeltaMatroid(1, (0, 1))  # ({1}; {∅, {1}})
EDGE = DeltaMatroid(2, (0, 3))


def tensor_product(s: TensorElement, t: TensorElement) -> TensorElement:
    out = []
    for k1, c1 in s.terms.items():
        for k2, c2 in t.terms.items():
            out.append((tuple(product(a, b) for a, b in zip(k1, k2)), c1 * c2))
    return TensorElement(out)


def test_basis_terms_merge_up_to_isomorphism():
    h = HopfElement([(DeltaMatroid(2, (1,)), 1), (DeltaMatroid(2, (2,)), 2)])
    assert len(h) == 1 and list(h.terms.values()) == [XPoly.const(3)]
    assert HopfElement([(POINT, 1), (POINT, -1)]) == 0


def test_mixed_grading_detected():
    with pytest.raises(HopfError):
        (HopfElement.basis(POINT) + HopfElement.basis(EDGE)).grading()


def test_character_values():
    assert character_xi(EMPTY) == ONE
    assert character_xi(POINT) == X
    assert character_xi(BOTH) == XPoly.const(-1)
    assert character_xi(UNIT) == ONE
    assert character_xi(EDGE) == ZERO
    assert character_xi(product(POINT, product(BOTH, POINT))) == -(X * X)
    assert character_xi(HopfElement([(POINT, 2), (BOTH, X)])) == X


@given(binary_delta_matroids(max_n=3), binary_delta_matroids(max_n=3))
def test_character_is_multiplicative(a, b):
    assert character_xi(product(a, b)) == character_xi(a) * character_xi(b)


@given(binary_delta_matroids(max_n=4))
def test_counit_identity(D):
    left = TensorElement({k: c for k, c in coproduct(D).terms.items() if k[0].n == 0})
    assert left.multiply_out() == HopfElement.basis(D)


@given(binary_delta_matroids(max_n=4))
def test_coassociative_and_cocommutative(D):
    d = coproduct(D)
    assert d.apply_coproduct(0) == d.apply_coproduct(1)
    assert d.swap() == d


@given(binary_delta_matroids(max_n=2), binary_delta_matroids(max_n=2))
def test_coproduct_is_multiplicative(a, b):
    assert coproduct(product(a, b)) == tensor_product(coproduct(a), coproduct(b))


def test_reduced_coproduct_of_singleton_vanishes():
    assert reduced_coproduct(POINT).terms == {}
    assert reduced_coproduct(EDGE).terms == {(EMPTY, EMPTY): XPoly.const(2)}


def test_set_partition_counts_are_bell_numbers():
    assert [sum(1 for _ in set_partitions((1 << n) - 1)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_xi_composition_small():
    assert xi_composition((2,), EDGE) == ZERO
    assert xi_composition((1, 1), EDGE) == ONE * 2
    D = product(POINT, BOTH)
    assert xi_composition((1, 1), D) == -2 * X
    with pytest.raises(HopfError):
        xi_composition((1,), EDGE)


def test_primitive_projection_examples():
    assert primitive_projection(POINT) == HopfElement.basis(POINT)
    two_points = product(POINT, POINT)
    assert primitive_projection(two_points) == 0
    # a connected pair: D - (product of its two one-point restrictions)
    assert primitive_projection(EDGE) == HopfElement([(EDGE, 1), (product(EMPTY, EMPTY), -1)])
    D = DeltaMatroid(2, (1, 2))
    assert character_xi(primitive_projection(D)) == -(X * X)
    with pytest.raises(HopfError):
        primitive_projection(UNIT)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projection_matches_literal_series(n):
    for D in enumerate_binary_delta_matroids(n):
        assert primitive_projection(D) == literal_primitive_projection(D)


def test_projection_matches_literal_series_sample_at_four():
    for D in enumerate_binary_delta_matroids(4)[::15]:
        assert primitive_projection(D) == literal_primitive_projection(D)


@given(binary_delta_matroids(min_n=1, max_n=4))
def test_projection_idempotent_and_primitive(D):
    p = primitive_projection(D)
    assert primitive_projection(p) == p
    assert reduced_coproduct(p).terms == {}
    assert primitive_xi_value(D) == character_xi(p)


@given(binary_delta_matroids(min_n=1, max_n=2), binary_delta_matroids(min_n=1, max_n=2))
def test_projection_kills_products(a, b):
    assert primitive_projection(product(a, b)) == 0


def test_character_rejects_improper():
    with pytest.raises(ValueError):
        character_xi(SetSystem(1, ()))
