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

"""Hurwitz polynomials and the free Baxter algebra on C.

A Hurwitz polynomial is a finitely supported sequence (a_n) with the
product c_n = sum_k (n choose k) a_k b_(n-k).  In the basis e_n this is
e_m e_n = (m+n choose n) e_(m+n), and the shift e_n -> e_(n+1) is a
Baxter operator of weight 0.  At weight 0, 1^(n+1) -> e_n identifies
Sha(C) with this algebra.

"""

from .monomials import ONE, Monoid, LinearCombination, accumulate
from .coefficients import Weight, binomial
from .baxter import BaxterAlgebra, BaxElement
from .errors import MixShuffleError, UnsupportedWeightError, MonoidMismatchError


#: The monoid of Sha(C): no generators, so every word is 1|1|...|1.
EMPTY = Monoid()

class HurwitzPolynomial(LinearCombination):
    """A Hurwitz polynomial, stored as a sparse map n -> a_n."""

    def _check_key(self, n):
        if not isinstance(n, int) or n < 0:
            raise MixShuffleError('Hurwitz indices are natural numbers, not %r.' % (n,))
        return n

    @classmethod
    def basis(cls, ring, n):
        """The sequence e_n with a single 1 at index n."""
        return cls(ring, {n: 1})

    @classmethod
    def from_sequence(cls, ring, values):
        return cls(ring, enumerate(values))

    def coefficients(self):
        """The dense sequence (a_0, ..., a_N) up to the last nonzero entry."""
        if not self.terms:
            return ()
        return tuple(self.coefficient(n) for n in range(max(self.terms) + 1))

    def __mul__(self, other):
        return hurwitz_mul(self, other)

def hurwitz_mul(a, b):
    a._check(b)
    ring, terms = a.ring, {}
    for i, x in a.terms.items():
        for j, y in b.terms.items():
            accumulate(terms, i + j, binomial(i + j, i, ring) * x * y)
    return a._new(terms)

def hurwitz_shift(a):
    """(Pa)_0 = 0 and (Pa)_(n+1) = a_n."""
    return a.map_keys(lambda n: n + 1)

class HurwitzAlgebra(BaxterAlgebra):
    """Hurwitz polynomials with the shift, a Baxter algebra of weight 0."""
    name = 'Hurwitz algebra'

    def __init__(self, ring):
        self.ring, self.weight = ring, Weight(0, ring)

    def element(self, values):
        if isinstance(values, dict):
            return HurwitzPolynomial(self.ring, values)
        return HurwitzPolynomial.from_sequence(self.ring, values)

    def basis(self, n):
        return HurwitzPolynomial.basis(self.ring, n)

    def zero(self):
        return HurwitzPolynomial(self.ring)

    def one(self):
        return HurwitzPolynomial.basis(self.ring, 0)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return hurwitz_mul(a, b)

    def scale(self, c, a):
        return a.scale(c)

    def operator(self, a):
        return hurwitz_shift(a)

def one_tensor(ring, k):
    """The word 1^(k) of Sha(C), k >= 1."""
    if k < 1:
        raise MixShuffleError('Words of Sha(C) have at least one slot.')
    return BaxElement(ring, EMPTY, {(ONE,) * k: 1})

def embed_sha_c(x, weight):
    """Map an element of Sha(C) to Hurwitz polynomials by 1^(n+1) -> e_n.
    Only a homomorphism at weight 0.

    """
    if not weight.is_zero():
        raise UnsupportedWeightError(
            'Sha(C) embeds into Hurwitz polynomials only at weight 0, not %s.' % weight)
    if x.monoid.generators:
        raise MonoidMismatchError('Only elements of Sha(C) over the empty '
                                  'alphabet can be embedded, not over {%s}.' % x.monoid)
    return HurwitzPolynomial(x.ring, dict(
        (len(word) - 1, c) for word, c in x.terms.items()))

def one_tensor_product(m, n, weight):
    """The closed form of 1^(m+1) * 1^(n+1) in Sha(C):

        sum_k (m+n-k choose n)(n choose k) lambda^k 1^(m+n+1-k)

    """
    if m < 0 or n < 0:
        raise MixShuffleError('m and n must be natural numbers.')
    ring, terms = weight.ring, {}
    for k in range(m + 1):
        c = binomial(m + n - k, n, ring) * binomial(n, k, ring) * weight.power(k)
        accumulate(terms, (ONE,) * (m + n + 1 - k), c)
    return BaxElement(ring, EMPTY, terms)
