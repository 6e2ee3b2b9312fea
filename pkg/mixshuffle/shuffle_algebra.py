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

"""The mixable shuffle algebra on the direct sum of the tensor powers
of A = C<M>.

A word is a tuple of Monomials representing the pure tensor
u_1 (x) ... (x) u_k; the empty word is the identity 1_C.  Tensor slots
are independent, so a slot holding 1 is not the same as a missing slot.

"""

import logging
from functools import lru_cache
from .monomials import LinearCombination, accumulate
from .shuffles import enumerate_mixable_pair, enumerate_mixable_triple, apply_slots
from .errors import RingMismatchError, DimensionMismatchError, MixShuffleError

logger = logging.getLogger('mixshuffle')

def word_order(word):
    """Canonical order: longer words first, then lexicographic."""
    return (-len(word), tuple(u.key for u in word))

class TensorCombination(LinearCombination):
    """A linear combination of words over a monoid."""
    min_length = 0

    def __init__(self, ring, monoid, terms=()):
        self.monoid = monoid
        LinearCombination.__init__(self, ring, terms)

    def _check_key(self, word):
        word = tuple(word)
        if len(word) < self.min_length:
            raise MixShuffleError('%s words need at least %d slot(s).' % (
                type(self).__name__, self.min_length))
        return tuple(self.monoid.validate(u) for u in word)

    def _context(self):
        return self.monoid

    def sort_key(self, word):
        return word_order(word)

    @classmethod
    def word(cls, ring, monoid, word, coeff=1):
        return cls(ring, monoid, {tuple(word): coeff})

class PlusElement(TensorCombination):
    """An element of the mixable shuffle algebra Sha+."""

    @classmethod
    def identity(cls, ring, monoid):
        return cls(ring, monoid, {(): 1})

@lru_cache(maxsize=None)
def shuffle_table(m, n):
    """(slots, merge count) of every mixable (m,n)-shuffle."""
    return tuple((s.slots, s.degree) for s in enumerate_mixable_pair(m, n))

def apply_mixable_to_tensor(x, y, shuffle, monoid=None):
    """The mixable shuffle sigma(x (x) y; T) of two words; merged slots
    hold the product of their monomials.

    """
    if (len(x), len(y)) != (shuffle.m, shuffle.n):
        raise DimensionMismatchError('Cannot apply an (%d,%d)-shuffle to '
                                     'words of lengths %d and %d.' % (
            shuffle.m, shuffle.n, len(x), len(y)))
    merge = monoid.mul if monoid is not None else (lambda u, v: u * v)
    return tuple(apply_slots(tuple(x) + tuple(y), shuffle.slots, merge))

def apply_mixable_triple_to_tensor(x, y, z, shuffle, monoid=None):
    merge = monoid.mul if monoid is not None else (lambda u, v: u * v)
    return tuple(apply_slots(tuple(x) + tuple(y) + tuple(z), shuffle.slots,
                             merge))

def shuffle_words(x, y, monoid):
    """Yield (word, merge count) over the mixable shuffles of x and y."""
    values = tuple(x) + tuple(y)
    mul = monoid.mul
    for slots, degree in shuffle_table(len(x), len(y)):
        yield tuple(apply_slots(values, slots, mul)), degree

def _check_operands(x, y, weight):
    x._check(y)
    if weight is not None and weight.ring != x.ring:
        raise RingMismatchError('The weight lives in %s, the operands in %s.' % (
            weight.ring, x.ring))

def mixable_product_plus(x, y, weight):
    """The mixable shuffle product of weight lambda, extended bilinearly.
    The empty word acts by scalar multiplication.

    """
    _check_operands(x, y, weight)
    terms, monoid = {}, x.monoid
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            c = cx * cy
            for word, degree in shuffle_words(wx, wy, monoid):
                accumulate(terms, word, c * weight.power(degree))
    logger.debug('Product of %d and %d terms has %d terms.',
                 len(x), len(y), len(terms))
    return x._new(terms)

def _graded(element):
    if isinstance(element, dict):
        return element
    return {0: element}

def mixable_product_plus_graded(x, y):
    """The product with lambda kept symbolic: operands and result are
    dicts mapping a power of lambda to its PlusElement coefficient.  A
    plain PlusElement counts as lambda**0.

    """
    x, y = _graded(x), _graded(y)
    result = {}
    for dx, ex in x.items():
        for dy, ey in y.items():
            _check_operands(ex, ey, None)
            for wx, cx in ex.terms.items():
                for wy, cy in ey.terms.items():
                    c = cx * cy
                    for word, degree in shuffle_words(wx, wy, ex.monoid):
                        accumulate(result.setdefault(dx + dy + degree, {}),
                                   word, c)
            template = ex
    return dict((d, template._new(terms)) for d, terms in result.items() if terms)

def triple_product_graded(x, y, z):
    """Expand x * y * z directly over the mixable (m,n,l)-shuffles, each
    weighted by lambda to its degree.  Agrees with both bracketings of
    the graded product.

    """
    _check_operands(x, y, None)
    _check_operands(x, z, None)
    result, monoid = {}, x.monoid
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            for wz, cz in z.terms.items():
                c = cx * cy * cz
                for shuffle in enumerate_mixable_triple(len(wx), len(wy), len(wz)):
                    word = apply_mixable_triple_to_tensor(wx, wy, wz, shuffle,
                                                          monoid)
                    accumulate(result.setdefault(shuffle.degree, {}), word, c)
    return dict((d, x._new(terms)) for d, terms in result.items() if terms)

def evaluate_graded(graded, weight, like):
    """Substitute lambda into a graded product.  like supplies the zero
    for an empty product.

    """
    total = like.zero_like()
    for degree, element in graded.items():
        total = total + element.scale(weight.power(degree))
    return total
