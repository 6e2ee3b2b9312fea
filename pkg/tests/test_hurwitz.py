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

from math import comb
import pytest
from hypothesis import given, settings, strategies as st
from mixshuffle.coefficients import INTEGERS, RATIONALS, Weight
from mixshuffle.monomials import ONE, Monoid
from mixshuffle.baxter import (BaxElement, FreeBaxterAlgebra, augmented_product,
                               baxter_operator, check_baxter_identity,
                               check_homomorphism, universal_map)
from mixshuffle.hurwitz import (HurwitzPolynomial, HurwitzAlgebra, EMPTY,
                                hurwitz_mul, hurwitz_shift, embed_sha_c,
                                one_tensor, one_tensor_product)
from mixshuffle.errors import (MixShuffleError, RingMismatchError,
                               UnsupportedWeightError, MonoidMismatchError)
from strategies import RINGS, WEIGHTS, hurwitz_polynomials, sha_c_elements

H = HurwitzAlgebra(INTEGERS)
e = H.basis

def test_products():
    assert hurwitz_mul(e(1), e(1)) == e(2).scale(2)
    assert hurwitz_mul(e(2), e(3)) == e(5).scale(10)
    a = H.element([1, -2, 0, 4])
    assert hurwitz_mul(e(0), a) == a
    assert e(1) * e(2) == e(3).scale(3)

def test_convolution():
    a, b = [1, 2, 3], [4, 5]
    expected = [sum(comb(n, k) * a[k] * b[n - k]
                    for k in range(n + 1) if k < len(a) and n - k < len(b))
                for n in range(4)]
    assert hurwitz_mul(H.element(a), H.element(b)).coefficients() == \
        tuple(INTEGERS(c) for c in expected)

def test_sequences():
    a = H.element([0, 3, 0, 0])
    assert a.coefficients() == (0, 3)
    assert a == H.element({1: 3})
    assert H.zero().coefficients() == ()
    with pytest.raises(MixShuffleError):
        HurwitzPolynomial(INTEGERS, {-1: 1})
    with pytest.raises(RingMismatchError):
        hurwitz_mul(e(0), HurwitzAlgebra(RATIONALS).basis(0))

def test_shift():
    for n in range(5):
        assert hurwitz_shift(e(n)) == e(n + 1)
    assert hurwitz_shift(H.zero()) == H.zero()
    assert hurwitz_shift(H.element([2, 0, 1])).coefficients() == (0, 2, 0, 1)

@pytest.mark.parametrize('ring', RINGS, ids=str)
def test_ring_laws(ring):
    R = HurwitzAlgebra(ring)
    polys = hurwitz_polynomials(ring)

    @settings(max_examples=200)
    @given(polys, polys, polys)
    def check(a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert R.one() * a == a
        assert check_baxter_identity(R, a, b)
    check()

def test_embedding_examples():
    w = Weight(0)
    assert embed_sha_c(one_tensor(INTEGERS, 1), w) == e(0)
    x = BaxElement(INTEGERS, EMPTY, {(ONE, ONE): 3, (ONE,): 1})
    assert embed_sha_c(x, w) == H.element([1, 3])
    with pytest.raises(UnsupportedWeightError):
        embed_sha_c(x, Weight(1))
    with pytest.raises(MonoidMismatchError):
        embed_sha_c(BaxElement.identity(INTEGERS, Monoid('x')), w)

@pytest.mark.parametrize('ring', RINGS, ids=str)
def test_embedding_is_a_homomorphism(ring):
    F = FreeBaxterAlgebra(ring, EMPTY, Weight(0, ring))
    R = HurwitzAlgebra(ring)

    @given(st.lists(sha_c_elements(ring), min_size=1, max_size=3))
    def check(xs):
        assert check_homomorphism(F, R, lambda x: embed_sha_c(x, F.weight), xs)
    check()

def test_embedding_on_long_words():
    F = FreeBaxterAlgebra(INTEGERS, EMPTY, Weight(0))
    for m in range(8):
        for n in range(8 - m):
            x, y = one_tensor(INTEGERS, m + 1), one_tensor(INTEGERS, n + 1)
            assert embed_sha_c(F.mul(x, y), F.weight) == e(m) * e(n)
            assert embed_sha_c(baxter_operator(x), F.weight) == \
                hurwitz_shift(embed_sha_c(x, F.weight))

def test_embedding_is_injective():
    images = set()
    for k in range(1, 9):
        images.add(embed_sha_c(one_tensor(INTEGERS, k), Weight(0)))
    assert len(images) == 8

def test_one_tensor_examples():
    for w in WEIGHTS:
        w = Weight(w)
        assert one_tensor_product(1, 1, w) == BaxElement(
            INTEGERS, EMPTY, {(ONE,) * 3: 2, (ONE,) * 2: w.value})
        for n in range(5):
            assert one_tensor_product(0, n, w) == one_tensor(INTEGERS, n + 1)
    for m in range(5):
        for n in range(5):
            assert one_tensor_product(m, n, Weight(0)) == \
                one_tensor(INTEGERS, m + n + 1).scale(comb(m + n, n))
    with pytest.raises(MixShuffleError):
        one_tensor_product(-1, 0, Weight(0))

@pytest.mark.parametrize('w', WEIGHTS)
def test_one_tensor_closed_form(w):
    w = Weight(w)
    for m in range(7):
        for n in range(7):
            direct = augmented_product(one_tensor(INTEGERS, m + 1),
                                       one_tensor(INTEGERS, n + 1), w)
            assert one_tensor_product(m, n, w) == direct

def test_universal_map_agrees_with_embedding():
    for n in range(7):
        x = one_tensor(INTEGERS, n + 1)
        assert universal_map({}, H, x) == embed_sha_c(x, Weight(0))
