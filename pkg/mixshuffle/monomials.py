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

"""Monomials, commutative monoids and sparse linear combinations.

The slot algebra A of every tensor is the monoid algebra C<M> of a
finitely generated commutative monoid M.  The free commutative monoid on
an alphabet X gives A = C[X]; a generator may also be given a cyclic
relation g^(index + period) = g^index.

"""

import re
from .errors import (MixShuffleError, RingMismatchError, MonoidMismatchError,
                     UnknownGeneratorError)

_name = re.compile(r'^[A-Za-z_][A-Za-z_0-9]*$')

class Monomial:
    """An element of a free commutative monoid, stored as a tuple of
    (generator, exponent) pairs sorted by generator name.  No zero
    exponents are stored; the empty tuple is the identity 1.

    """
    __slots__ = ('exponents', '_hash')

    def __init__(self, exponents=()):
        if isinstance(exponents, dict):
            exponents = exponents.items()
        self.exponents = tuple(sorted((g, e) for g, e in exponents if e))
        self._hash = hash(self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.exponents < other.exponents

    @property
    def key(self):
        return self.exponents

    def is_one(self):
        return not self.exponents

    def degree(self):
        return sum(e for g, e in self.exponents)

    def names(self):
        return [g for g, e in self.exponents]

    def __mul__(self, other):
        if not other.exponents:
            return self
        if not self.exponents:
            return other
        exponents = dict(self.exponents)
        for g, e in other.exponents:
            exponents[g] = exponents.get(g, 0) + e
        return Monomial(exponents)

    def __str__(self):
        if not self.exponents:
            return '1'
        return '*'.join(g if e == 1 else '%s^%d' % (g, e)
                        for g, e in self.exponents)

    def __repr__(self):
        return 'Monomial(%s)' % self

ONE = Monomial()

class Monoid:
    """A finitely generated commutative monoid.  Relations, if given,
    map a generator to a pair (index, period) imposing
    g^(index+period) = g^index.  Without relations this is the free
    commutative monoid on the generators.

    """
    def __init__(self, generators=(), relations=None):
        if isinstance(generators, str):
            generators = [g for g in generators.split(',') if g.strip()]
        generators = tuple(g.strip() for g in generators)
        if len(set(generators)) != len(generators):
            raise MixShuffleError('Generator names must be unique.')
        for g in generators:
            if not _name.match(g):
                raise MixShuffleError('Bad generator name %r.' % g)
        self.generators = generators
        self.relations = dict(relations or {})
        for g, (index, period) in self.relations.items():
            if g not in generators:
                raise UnknownGeneratorError('Relation on unknown generator %r.' % g)
            if index < 0 or period < 1:
                raise MixShuffleError('Relations need index >= 0 and period >= 1.')
        self._key = (self.generators, tuple(sorted(self.relations.items())))
        self.one = ONE

    def __eq__(self, other):
        return isinstance(other, Monoid) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        return ','.join(self.generators)

    def __repr__(self):
        if self.relations:
            return 'Monoid(%s; %s)' % (self, self.relations)
        return 'Monoid(%s)' % self

    def is_free(self):
        return not self.relations

    def _reduce_exponent(self, g, e):
        if g in self.relations:
            index, period = self.relations[g]
            if e >= index + period:
                e = index + (e - index) % period
        return e

    def reduce(self, monomial):
        if not self.relations:
            return monomial
        return Monomial((g, self._reduce_exponent(g, e))
                        for g, e in monomial.exponents)

    def mul(self, u, v):
        return self.reduce(u * v)

    def validate(self, monomial):
        """Raise UnknownGeneratorError unless monomial is over this
        monoid's generators, and return its reduced form.

        """
        for g in monomial.names():
            if g not in self.generators:
                raise UnknownGeneratorError(
                    'Unknown generator %r; the alphabet is {%s}.' % (g, self))
        return self.reduce(monomial)

    def generator(self, name):
        return self.validate(Monomial({name: 1}))

    def monomial(self, exponents):
        return self.validate(Monomial(exponents))

    def power(self, u, k):
        result = ONE
        for _ in range(k):
            result = self.mul(result, u)
        return result

def accumulate(terms, key, coeff):
    """Add coeff to terms[key] in place, dropping the key at zero."""
    old = terms.get(key)
    if old is not None:
        coeff = old + coeff
    if coeff:
        terms[key] = coeff
    elif old is not None:
        del terms[key]

class LinearCombination:
    """A finite formal sum of basis keys with nonzero coefficients from
    a single ring.  Subclasses choose the keys, their canonical order
    and any extra context (such as the monoid) which must agree between
    operands.  Values are treated as immutable.

    """
    def __init__(self, ring, terms=()):
        self.ring = ring
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            accumulate(clean, self._check_key(key), ring(coeff))
        self.terms = clean

    def _check_key(self, key):
        return key

    def _context(self):
        return ()

    def sort_key(self, key):
        return key

    def _new(self, terms):
        result = object.__new__(type(self))
        result.__dict__.update(self.__dict__)
        result.terms = terms
        return result

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError('Cannot combine %s with %s.' % (
                type(self).__name__, type(other).__name__))
        if other.ring != self.ring:
            raise RingMismatchError('Mixed-ring operands: %s and %s.' % (
                self.ring, other.ring))
        if other._context() != self._context():
            raise MonoidMismatchError('Operands live over different monoids.')

    def zero_like(self):
        return self._new({})

    def __iter__(self):
        """Iterate over (key, coefficient) pairs in canonical order."""
        for key in sorted(self.terms, key=self.sort_key):
            yield key, self.terms[key]

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key):
        return self.terms.get(key, self.ring.zero)

    def support(self):
        return [key for key, coeff in self]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.ring == other.ring and self._context() == other._context()
                and self.terms == other.terms)

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            accumulate(terms, key, coeff)
        return self._new(terms)

    def __neg__(self):
        return self._new({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = self.ring(scalar)
        if not scalar:
            return self._new({})
        terms = {}
        for key, coeff in self.terms.items():
            accumulate(terms, key, coeff * scalar)
        return self._new(terms)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def map_keys(self, function):
        """Apply a key-to-key function linearly."""
        terms = {}
        for key, coeff in self.terms.items():
            accumulate(terms, function(key), coeff)
        return self._new(terms)

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, ', '.join(
            '%s: %s' % (key, coeff) for key, coeff in self))

class Polynomial(LinearCombination):
    """An element of the monoid algebra C<M>."""

    def __init__(self, ring, monoid, terms=()):
        self.monoid = monoid
        LinearCombination.__init__(self, ring, terms)

    def _check_key(self, key):
        return self.monoid.validate(key)

    def _context(self):
        return self.monoid

    def sort_key(self, key):
        return key.key

    @classmethod
    def from_monomial(cls, ring, monoid, monomial, coeff=1):
        return cls(ring, monoid, {monomial: coeff})

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                accumulate(terms, self.monoid.mul(u, v), a * b)
        return self._new(terms)

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join('%s*%s' % (c, u) for u, c in self)
