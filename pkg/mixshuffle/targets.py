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

"""Small concrete Baxter algebras to map the free ones into."""

from .baxter import BaxterAlgebra
from .coefficients import Weight
from .errors import (MixShuffleError, RingMismatchError, DimensionMismatchError,
                     UnsupportedWeightError)

class CoefficientAlgebra(BaxterAlgebra):
    """The coefficient ring C itself, elements being Coeff values."""

    def __init__(self, ring, weight):
        if not isinstance(weight, Weight):
            weight = Weight(weight, ring)
        if weight.ring != ring:
            raise RingMismatchError('The weight must live in %s.' % ring)
        self.ring, self.weight = ring, weight

    def element(self, value):
        return self.ring(value)

    def zero(self):
        return self.ring.zero

    def one(self):
        return self.ring.one

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def scale(self, c, a):
        return self.ring(c) * a

class ZeroOperatorAlgebra(CoefficientAlgebra):
    """C with P = 0, a Baxter operator of every weight."""
    name = 'zero-operator algebra'

    def operator(self, a):
        return self.ring.zero

class ScalarOperatorAlgebra(CoefficientAlgebra):
    """C with P = -lambda id, a Baxter operator of weight lambda."""
    name = 'scalar-operator algebra'

    def operator(self, a):
        return -self.weight.value * a

class TabulatedBaxterAlgebra(BaxterAlgebra):
    """A Baxter algebra given by a finite C-basis e_0, ..., e_{d-1}.

    Elements are tuples of d Coeff values.  mul_table[i][j] is the
    coordinate vector of e_i e_j, unit that of the identity and
    operator_matrix[j] that of P(e_j).  Nothing here checks that the
    table is commutative or associative or that P satisfies the Baxter
    identity; check_baxter_identity does that on samples.

    """
    name = 'tabulated Baxter algebra'

    def __init__(self, ring, weight, mul_table, unit, operator_matrix):
        if not isinstance(weight, Weight):
            weight = Weight(weight, ring)
        if weight.ring != ring:
            raise RingMismatchError('The weight must live in %s.' % ring)
        self.ring, self.weight = ring, weight
        self.dimension = d = len(unit)
        self.unit = self.vector(unit)
        if len(mul_table) != d or any(len(row) != d for row in mul_table):
            raise DimensionMismatchError('The product table must be %dx%d.' % (d, d))
        if len(operator_matrix) != d:
            raise DimensionMismatchError('The operator needs %d images.' % d)
        self.mul_table = tuple(tuple(self.vector(v) for v in row)
                               for row in mul_table)
        self.operator_matrix = tuple(self.vector(v) for v in operator_matrix)

    def vector(self, values):
        values = tuple(self.ring(v) for v in values)
        if len(values) != self.dimension:
            raise DimensionMismatchError('Expected %d coordinates, got %d.' % (
                self.dimension, len(values)))
        return values

    element = vector

    def basis(self, i):
        return tuple(self.ring.one if j == i else self.ring.zero
                     for j in range(self.dimension))

    def zero(self):
        return (self.ring.zero,) * self.dimension

    def one(self):
        return self.unit

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, c, a):
        c = self.ring(c)
        return tuple(c * x for x in a)

    def _combine(self, coords, images):
        result = list(self.zero())
        for c, image in zip(coords, images):
            if c:
                for k, v in enumerate(image):
                    result[k] = result[k] + c * v
        return tuple(result)

    def mul(self, a, b):
        result = self.zero()
        for i, x in enumerate(a):
            if x:
                result = self.add(result, self.scale(x, self._combine(
                    b, self.mul_table[i])))
        return result

    def operator(self, a):
        return self._combine(a, self.operator_matrix)

    def render(self, a):
        return '(%s)' % ', '.join(str(x) for x in a)

def partial_sum_algebra(ring, size, weight):
    """C^size with pointwise product and a partial-sum operator.

    At weight 1 the operator is the strict sum P(a)_i = a_0 + ... + a_{i-1};
    at weight -1 it is the inclusive sum a_0 + ... + a_i.

    """
    if not isinstance(weight, Weight):
        weight = Weight(weight, ring)
    if size < 1:
        raise MixShuffleError('The algebra needs at least one coordinate.')
    if weight.value == 1:
        strict = True
    elif weight.value == -1:
        strict = False
    else:
        raise UnsupportedWeightError(
            'Partial sums are Baxter operators of weight 1 or -1, not %s.' % weight)
    one, zero = ring.one, ring.zero
    table = [[tuple(one if k == i == j else zero for k in range(size))
              for j in range(size)] for i in range(size)]
    if strict:
        operator = [tuple(one if k > j else zero for k in range(size))
                    for j in range(size)]
    else:
        operator = [tuple(one if k >= j else zero for k in range(size))
                    for j in range(size)]
    return TabulatedBaxterAlgebra(ring, weight, table, (one,) * size, operator)
