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

"""Seeded random elements for the identity checks run from the command
line.  The same seed always produces the same samples.

"""

import random
from .monomials import ONE
from .baxter import BaxElement, FreeBaxterAlgebra
from .targets import CoefficientAlgebra, TabulatedBaxterAlgebra
from .hurwitz import HurwitzAlgebra, HurwitzPolynomial
from .cartier import CartierAlgebra, CartierElement, CartierSymbol
from .errors import MixShuffleError

class Sampler:
    """Draws small random elements.  Coefficients lie in [-bound, bound],
    words have at most max_length slots and monomials total degree at
    most max_degree.

    """
    def __init__(self, seed=0, max_terms=3, max_length=3, max_degree=2, bound=3):
        self.random = random.Random(seed)
        self.max_terms, self.max_length = max_terms, max_length
        self.max_degree, self.bound = max_degree, bound

    def coeff(self, ring):
        return ring(self.random.randint(-self.bound, self.bound))

    def monomial(self, monoid, min_degree=0):
        if not monoid.generators:
            return ONE
        exponents = {}
        for _ in range(self.random.randint(min_degree, max(min_degree, self.max_degree))):
            g = self.random.choice(monoid.generators)
            exponents[g] = exponents.get(g, 0) + 1
        return monoid.monomial(exponents)

    def word(self, monoid, length):
        return tuple(self.monomial(monoid) for _ in range(length))

    def tensor(self, ring, monoid, cls=BaxElement):
        terms = {}
        for _ in range(self.random.randint(1, self.max_terms)):
            length = self.random.randint(cls.min_length, self.max_length)
            terms[self.word(monoid, length)] = self.coeff(ring)
        return cls(ring, monoid, terms)

    def symbol(self, monoid):
        if not monoid.generators:
            raise MixShuffleError('Cartier symbols need at least one generator.')
        length = self.random.randint(0, self.max_length)
        if length == 0:
            return CartierSymbol(self.monomial(monoid, 1))
        bracket = self.word(monoid, length - 1) + (self.monomial(monoid, 1),)
        return CartierSymbol(self.monomial(monoid), bracket)

    def cartier(self, ring, monoid):
        return CartierElement(ring, monoid, dict(
            (self.symbol(monoid), self.coeff(ring))
            for _ in range(self.random.randint(1, self.max_terms))))

    def hurwitz(self, ring):
        return HurwitzPolynomial.from_sequence(ring, [
            self.coeff(ring) for _ in range(self.random.randint(1, self.max_length + 1))])

    def element(self, R):
        """A random element of one of the bundled Baxter algebras."""
        if isinstance(R, FreeBaxterAlgebra):
            return self.tensor(R.ring, R.monoid)
        if isinstance(R, HurwitzAlgebra):
            return self.hurwitz(R.ring)
        if isinstance(R, CartierAlgebra):
            return self.cartier(R.ring, R.monoid)
        if isinstance(R, CoefficientAlgebra):
            return self.coeff(R.ring)
        if isinstance(R, TabulatedBaxterAlgebra):
            return tuple(self.coeff(R.ring) for _ in range(R.dimension))
        raise MixShuffleError('Cannot sample elements of %r.' % R)
