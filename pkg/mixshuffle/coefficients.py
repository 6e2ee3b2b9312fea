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

"""Exact coefficient rings.

Three kinds of commutative ring with identity are supported: the big
integers ('int'), the rationals ('rat') and the integers modulo n
('mod:<n>').  Ring elements are Coeff objects.  The weight used by the
mixable shuffle products is carried separately by a Weight, so the same
elements can be multiplied at several weights.

"""

import re
from fractions import Fraction
from math import comb
from .errors import MixShuffleError, RingMismatchError, MalformedCoefficientError

ring_kinds = ('int', 'rat', 'mod')

_literal = re.compile(r'^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+)\s*)?$')

class Ring:
    """A coefficient ring descriptor.  Descriptors with equal fields
    denote the same ring.

    >>> Ring('mod', 5)(3) * 4
    Coeff(mod:5, 2)

    """
    __slots__ = ('kind', 'modulus', '_zero', '_one')

    def __init__(self, kind, modulus=None):
        if kind not in ring_kinds:
            raise MixShuffleError('Unknown ring kind %r.' % kind)
        if kind == 'mod':
            if not isinstance(modulus, int) or modulus < 2:
                raise MixShuffleError('The modulus must be an integer >= 2.')
        else:
            modulus = None
        self.kind, self.modulus = kind, modulus
        self._zero = Coeff(self, self.normalize(0))
        self._one = Coeff(self, self.normalize(1))

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.kind == other.kind and
                self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __str__(self):
        if self.kind == 'mod':
            return 'mod:%d' % self.modulus
        return self.kind

    def __repr__(self):
        return 'Ring(%s)' % self

    def __call__(self, value):
        """Coerce an int, a Fraction, a literal string or a Coeff of this
        ring into this ring.

        """
        if isinstance(value, Coeff):
            if value.ring != self:
                raise RingMismatchError(
                    'Cannot coerce an element of %s into %s.' % (value.ring, self))
            return value
        if isinstance(value, str):
            return self.parse(value)
        return Coeff(self, self.normalize(value))

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def normalize(self, value):
        """Return the canonical representative of an int or Fraction."""
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise MalformedCoefficientError(
                'Cannot interpret %r as a coefficient.' % (value,))
        if self.kind == 'rat':
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                value = value.numerator
            elif self.kind == 'int':
                raise MalformedCoefficientError(
                    '%s is not an integer.' % value)
            else:
                try:
                    inverse = pow(value.denominator, -1, self.modulus)
                except ValueError:
                    raise MalformedCoefficientError(
                        '%s is not invertible modulo %d.' % (
                            value.denominator, self.modulus))
                return value.numerator * inverse % self.modulus
        if self.kind == 'mod':
            return value % self.modulus
        return value

    def parse(self, text):
        """Parse a literal such as '-1', '2/3' or '3' into this ring."""
        match = _literal.match(text)
        if match is None:
            raise MalformedCoefficientError('Malformed coefficient %r.' % text)
        sign, numerator, denominator = match.groups()
        value = int(numerator)
        if denominator is not None:
            if int(denominator) == 0:
                raise MalformedCoefficientError('Zero denominator in %r.' % text)
            value = Fraction(value, int(denominator))
        if sign == '-':
            value = -value
        return Coeff(self, self.normalize(value))

class Coeff:
    """An exact element of a coefficient ring.  Immutable."""
    __slots__ = ('ring', 'value')

    def __init__(self, ring, value):
        self.ring, self.value = ring, value

    def _value_of(self, other):
        if isinstance(other, Coeff):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError('Mixed-ring operands: %s and %s.' % (
                    self.ring, other.ring))
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.normalize(other)
        return None

    def _make(self, value):
        if self.ring.modulus is not None:
            value %= self.ring.modulus
        return Coeff(self.ring, value)

    def __add__(self, other):
        value = self._value_of(other)
        if value is None:
            return NotImplemented
        return self._make(self.value + value)
    __radd__ = __add__

    def __sub__(self, other):
        value = self._value_of(other)
        if value is None:
            return NotImplemented
        return self._make(self.value - value)

    def __rsub__(self, other):
        value = self._value_of(other)
        if value is None:
            return NotImplemented
        return self._make(value - self.value)

    def __mul__(self, other):
        value = self._value_of(other)
        if value is None:
            return NotImplemented
        return self._make(self.value * value)
    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise MixShuffleError('Only natural exponents are supported.')
        if self.ring.modulus is not None:
            return Coeff(self.ring, pow(self.value, exponent, self.ring.modulus))
        return Coeff(self.ring, self.value ** exponent)

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.ring.normalize(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return self.value != 0

    def is_negative(self):
        """True for negative integers and rationals; residues never are."""
        return self.ring.modulus is None and self.value < 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return 'Coeff(%s, %s)' % (self.ring, self.value)

INTEGERS = Ring('int')
RATIONALS = Ring('rat')

def parse_ring(text):
    """Return the Ring named by a CLI ring string: int, rat or mod:<n>."""
    text = text.strip()
    if text in ('int', 'rat'):
        return Ring(text)
    if text.startswith('mod:'):
        try:
            return Ring('mod', int(text[4:]))
        except ValueError:
            pass
    raise MixShuffleError('Unknown ring %r; use int, rat or mod:<n>.' % text)

class Weight:
    """The fixed weight lambda of the products.  Baxter's original
    convention uses q = -lambda.

    """
    __slots__ = ('value', '_powers')

    def __init__(self, value, ring=INTEGERS):
        if not isinstance(value, Coeff):
            value = ring(value)
        self.value = value
        self._powers = [value.ring.one]

    @classmethod
    def from_q(cls, q, ring=INTEGERS):
        if not isinstance(q, Coeff):
            q = ring(q)
        return cls(-q)

    @property
    def ring(self):
        return self.value.ring

    def power(self, exponent):
        """Return lambda**exponent, memoized."""
        powers = self._powers
        while len(powers) <= exponent:
            powers.append(powers[-1] * self.value)
        return powers[exponent]

    def is_zero(self):
        return not self.value

    def __eq__(self, other):
        return isinstance(other, Weight) and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return 'Weight(%s in %s)' % (self.value, self.ring)

def binomial(n, k, ring=INTEGERS):
    """The binomial coefficient n choose k as an element of ring, with
    the convention that it vanishes when k > n or k < 0.

    """
    if k < 0 or n < 0 or k > n:
        return ring.zero
    return ring(comb(n, k))
