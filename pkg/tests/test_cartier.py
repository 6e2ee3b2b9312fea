# -*- coding: utf-8 -*-
# Copyright© 2026 by the MixShuffle authors and others.
#
# This file is part of MixShuffle.
#
# MixShuffle is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# MixShuffle is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with MixShuffle.  If not, see <http://www.gnu.org/licenses/>.

from itertools import product as cartesian
import pytest
from hypothesis import given, settings, strategies as st
from mixshuffle.coefficients import INTEGERS, Weight
from mixshuffle.monomials import ONE, Monoid
from mixshuffle.shuffles import count_mixable_pair
from mixshuffle.baxter import (FreeBaxterAlgebra, BaxElement,
                               check_baxter_identity, check_homomorphism)
from mixshuffle.targets import partial_sum_algebra
from mixshuffle.cartier import (
    CartierSymbol, CartierElement, CartierTriple, CartierAlgebra,
    CartierMorphism, enumerate_cartier_triples, cartier_bijection,
    cartier_product, cartier_operator, embed_cartier, factor_through)
from mixshuffle.errors import (MixShuffleError, InvalidSymbolError,
                               WeightMismatchError, MonoidMismatchError)
from strategies import XY, RINGS, cartier_elements

x, y = XY.generator('x'), XY.generator('y')

def sym(head, *bracket, coeff=1):
    return CartierElement.symbol(INTEGERS, XY, head, bracket, coeff)

def test_symbols():
    assert str(CartierSymbol(x, [ONE, y])) == 'x.[1,y]'
    assert str(CartierSymbol(x)) == 'x.[]'
    assert CartierSymbol(x, [y]).word == (x, y)
    with pytest.raises(InvalidSymbolError):
        CartierSymbol(ONE)
    with pytest.raises(InvalidSymbolError):
        CartierSymbol(x, [y, ONE])
    with pytest.raises(MonoidMismatchError):
        CartierElement(INTEGERS, Monoid('g', {'g': (0, 2)}))

def test_triples():
    assert enumerate_cartier_triples(1, 1) == (
        CartierTriple(2, [1], [2]), CartierTriple(2, [2], [1]),
        CartierTriple(1, [1], [1]))
    assert len(enumerate_cartier_triples(2, 1)) == 5
    assert [t.sign() for t in enumerate_cartier_triples(1, 1)] == [1, 1, -1]
    with pytest.raises(MixShuffleError):
        CartierTriple(3, [1], [2])
    with pytest.raises(MixShuffleError):
        enumerate_cartier_triples(0, 1)

def test_triple_counts():
    for m in range(1, 6):
        for n in range(1, 6):
            triples = enumerate_cartier_triples(m, n)
            assert len(triples) == count_mixable_pair(m, n)
            assert len(set(triples)) == len(triples)
            assert all(t.m == m and t.n == n for t in triples)

def test_fill():
    triple = CartierTriple(3, [1, 3], [2, 3])
    assert triple.fill('ab', 'cd', lambda p, q: p + q) == ('a', 'c', 'bd')
    assert triple.overlap == 1 and triple.sign() == -1

def test_bijection():
    for m in range(1, 5):
        for n in range(1, 5):
            mapping = cartier_bijection(m, n)
            assert len(set(mapping.values())) == len(mapping)
            assert set(mapping.values()) == set(enumerate_cartier_triples(m, n))
            for shuffle, triple in mapping.items():
                assert triple.overlap == shuffle.degree
                assert triple.k == len(shuffle)

def test_head_only_products():
    assert cartier_product(sym(x), sym(y)) == sym(x * y)
    assert cartier_product(sym(x), sym(y, x)) == sym(x * y, x)
    assert cartier_product(sym(ONE, y), sym(x)) == sym(x, y)

def test_bracket_products():
    product = cartier_product(sym(ONE, x), sym(ONE, y))
    assert product == sym(ONE, x, y) + sym(ONE, y, x) - sym(ONE, x * y)
    assert [str(s) for s, _ in product] == ['1.[x,y]', '1.[y,x]', '1.[x*y]']

def test_operator():
    assert cartier_operator(sym(x)) == sym(ONE, x)
    assert cartier_operator(sym(x, y)) == sym(ONE, x, y)
    zero = sym(x).zero_like()
    assert cartier_operator(zero) == zero

def test_embedding_examples():
    assert embed_cartier(sym(x)) == BaxElement(INTEGERS, XY, {(x,): 1})
    assert embed_cartier(sym(ONE, x, y)) == \
        BaxElement(INTEGERS, XY, {(ONE, x, y): 1})

def all_symbols(max_length=3, max_degree=2):
    monomials = [XY.monomial({'x': i, 'y': j})
                 for i in range(max_degree + 1) for j in range(max_degree + 1)
                 if i + j <= max_degree]
    for length in range(max_length + 1):
        for head in monomials:
            for bracket in cartesian(monomials, repeat=length):
                if (length and not bracket[-1].is_one()) or \
                        (not length and not head.is_one()):
                    yield CartierSymbol(head, bracket)

def test_embedding_is_injective():
    words = set()
    count = 0
    for symbol in all_symbols():
        element = CartierElement(INTEGERS, XY, {symbol: 1})
        words.update(embed_cartier(element).support())
        count += 1
    assert len(words) == count

@pytest.mark.parametrize('ring', RINGS, ids=str)
def test_embedding_is_a_morphism(ring):
    B = CartierAlgebra(ring, XY)
    F = FreeBaxterAlgebra(ring, XY, Weight(-1, ring))

    @given(st.lists(cartier_elements(ring), min_size=1, max_size=3))
    def check(elements):
        assert check_homomorphism(B, F, embed_cartier, elements, unital=False)
    check()

@pytest.mark.parametrize('ring', RINGS, ids=str)
def test_algebra_laws(ring):
    B = CartierAlgebra(ring, XY)
    elements = cartier_elements(ring, max_terms=2)

    @settings(max_examples=50)
    @given(elements, elements, elements)
    def check(a, b, c):
        assert cartier_product(a, b) == cartier_product(b, a)
        assert cartier_product(cartier_product(a, b), c) == \
            cartier_product(a, cartier_product(b, c))
        assert check_baxter_identity(B, a, b)
    check()

def test_no_identity():
    with pytest.raises(MixShuffleError):
        CartierAlgebra(INTEGERS, XY).one()
    assert CartierAlgebra(INTEGERS, XY).weight.value == -1

def test_generators():
    B = CartierAlgebra(INTEGERS, XY)
    assert B.generator('x') == sym(x)
    assert B.element({CartierSymbol(x, [y]): 2}) == sym(x, y, coeff=2)

def test_morphism_into_free_algebra():
    F = FreeBaxterAlgebra(INTEGERS, XY, Weight(-1))
    phi = CartierMorphism(F, {'x': F.generator('x'), 'y': F.generator('y')}, XY)
    for symbol in all_symbols(2, 2):
        a = CartierElement(INTEGERS, XY, {symbol: 1})
        assert phi(a) == embed_cartier(a)

def test_factor_through_free_algebra():
    F = FreeBaxterAlgebra(INTEGERS, XY, Weight(-1))
    phi = CartierMorphism(F, {'x': F.generator('x'), 'y': F.generator('y')}, XY)
    lifted = factor_through(phi)
    assert lifted(F.generator('x')) == F.generator('x')
    a = F.element({(ONE, x, y): 2, (x * y, ONE, x): -1})
    assert lifted(a) == a

def test_factor_through_partial_sums():
    S = partial_sum_algebra(INTEGERS, 5, -1)
    images = {'x': S.vector([1, 2, 0, -1, 3]), 'y': S.vector([0, 1, 1, 2, -2])}
    phi = CartierMorphism(S, images, XY)
    lifted = factor_through(phi, S)
    for symbol in all_symbols(3, 1):
        a = CartierElement(INTEGERS, XY, {symbol: 3})
        assert lifted(embed_cartier(a)) == phi(a)

def test_factor_through_needs_weight_minus_one():
    S = partial_sum_algebra(INTEGERS, 3, 1)
    phi = CartierMorphism(S, {'x': S.one(), 'y': S.one()}, XY)
    with pytest.raises(WeightMismatchError):
        factor_through(phi)
    T = partial_sum_algebra(INTEGERS, 3, -1)
    with pytest.raises(MixShuffleError):
        factor_through(phi, T)

def test_morphism_errors():
    F = FreeBaxterAlgebra(INTEGERS, XY, Weight(-1))
    with pytest.raises(MixShuffleError):
        CartierMorphism(F, {'x': F.generator('x')}, XY)
    phi = CartierMorphism(F, {'x': F.generator('x'), 'y': F.generator('y')}, XY)
    with pytest.raises(MonoidMismatchError):
        phi(CartierElement(INTEGERS, Monoid('x'), {CartierSymbol(x): 1}))
