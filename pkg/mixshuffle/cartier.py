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

"""Cartier's free Baxter algebra of weight -1 without identity.

Its basis is the symbols u_0.[u_1, ..., u_m] over the monomials of a
free commutative monoid, where u_0 != 1 if m = 0 and u_m != 1
otherwise.  The product of two symbols with nonempty brackets runs over
the triples (k, P, Q) with P and Q covering {1..k}; positions in both P
and Q hold the product of the two entries and cost a factor -1 each.

    >>> M = Monoid('x,y')
    >>> a = CartierElement.symbol(INTEGERS, M, ONE, [M.generator('x')])
    >>> b = CartierElement.symbol(INTEGERS, M, ONE, [M.generator('y')])
    >>> [str(s) for s, c in cartier_product(a, b)]
    ['1.[x,y]', '1.[y,x]', '1.[x*y]']

"""

import logging
from functools import lru_cache
from itertools import combinations
from .monomials import ONE, Monoid, LinearCombination, accumulate
from .coefficients import INTEGERS, Weight
from .baxter import BaxterAlgebra, BaxElement, AlgebraMap, UniversalMap
from .shuffles import enumerate_mixable_pair
from .errors import (MixShuffleError, InvalidSymbolError, WeightMismatchError,
                     MonoidMismatchError)

logger = logging.getLogger('mixshuffle')

class CartierSymbol:
    """A basis symbol u_0.[u_1, ..., u_m]."""
    __slots__ = ('head', 'bracket', '_hash')

    def __init__(self, head, bracket=()):
        bracket = tuple(bracket)
        if not bracket and head.is_one():
            raise InvalidSymbolError('1.[] is not a symbol; the algebra has '
                                     'no identity.')
        if bracket and bracket[-1].is_one():
            raise InvalidSymbolError('The last bracket entry of %s.[%s] is 1.' % (
                head, ','.join(str(u) for u in bracket)))
        self.head, self.bracket = head, bracket
        self._hash = hash((head, bracket))

    @property
    def word(self):
        return (self.head,) + self.bracket

    def sort_key(self):
        return (-len(self.bracket), self.head.key,
                tuple(u.key for u in self.bracket))

    def __eq__(self, other):
        return (isinstance(other, CartierSymbol) and self.head == other.head
                and self.bracket == other.bracket)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return '%s.[%s]' % (self.head, ','.join(str(u) for u in self.bracket))

    def __repr__(self):
        return 'CartierSymbol(%s)' % self

class CartierElement(LinearCombination):
    """A linear combination of Cartier symbols."""

    def __init__(self, ring, monoid, terms=()):
        if not monoid.is_free():
            raise MonoidMismatchError('Cartier symbols need a free monoid.')
        self.monoid = monoid
        LinearCombination.__init__(self, ring, terms)

    def _check_key(self, symbol):
        if not isinstance(symbol, CartierSymbol):
            symbol = CartierSymbol(symbol[0], symbol[1:])
        for u in symbol.word:
            self.monoid.validate(u)
        return symbol

    def _context(self):
        return self.monoid

    def sort_key(self, symbol):
        return symbol.sort_key()

    @classmethod
    def symbol(cls, ring, monoid, head, bracket=(), coeff=1):
        return cls(ring, monoid, {CartierSymbol(head, bracket): coeff})

class CartierTriple:
    """A triple (k, P, Q) with P, Q sorted subsets of {1..k} covering it."""
    __slots__ = ('k', 'P', 'Q')

    def __init__(self, k, P, Q):
        P, Q = tuple(sorted(P)), tuple(sorted(Q))
        if set(P) | set(Q) != set(range(1, k + 1)):
            raise MixShuffleError('P and Q must cover 1..%d.' % k)
        self.k, self.P, self.Q = k, P, Q

    @property
    def m(self):
        return len(self.P)

    @property
    def n(self):
        return len(self.Q)

    @property
    def overlap(self):
        return self.m + self.n - self.k

    def sign(self):
        """(-1)^(k+m+n), that is -1 to the number of overlaps."""
        return -1 if self.overlap % 2 else 1

    def fill(self, a, b, mul):
        """Phi_(k,P,Q)(a, b): position j holds a_alpha if j is the
        alpha-th element of P only, b_beta if the beta-th of Q only, and
        their product if both.

        """
        p, q = dict((j, i) for i, j in enumerate(self.P)), \
            dict((j, i) for i, j in enumerate(self.Q))
        result = []
        for j in range(1, self.k + 1):
            if j in p and j in q:
                result.append(mul(a[p[j]], b[q[j]]))
            elif j in p:
                result.append(a[p[j]])
            else:
                result.append(b[q[j]])
        return tuple(result)

    def __eq__(self, other):
        return (isinstance(other, CartierTriple) and
                (self.k, self.P, self.Q) == (other.k, other.P, other.Q))

    def __hash__(self):
        return hash((self.k, self.P, self.Q))

    def __repr__(self):
        return 'CartierTriple(%d, %s, %s)' % (self.k, list(self.P), list(self.Q))

@lru_cache(maxsize=None)
def enumerate_cartier_triples(m, n):
    """The triples for an (m, n) product: k descending, then P, then Q."""
    if m < 1 or n < 1:
        raise MixShuffleError('Cartier triples need m, n >= 1.')
    result = []
    for k in range(m + n, max(m, n) - 1, -1):
        positions = range(1, k + 1)
        for P in combinations(positions, m):
            rest = [j for j in positions if j not in P]
            for shared in combinations(P, m + n - k):
                result.append(CartierTriple(k, P, sorted(rest + list(shared))))
    return tuple(result)

def cartier_triple_from_mixable(shuffle):
    """The triple of a mixable (m,n)-shuffle: P holds the positions whose
    slot draws on the first block, Q those drawing on the second.

    """
    m = shuffle.m
    P = [j for j, slot in enumerate(shuffle.slots, 1) if any(v <= m for v in slot)]
    Q = [j for j, slot in enumerate(shuffle.slots, 1) if any(v > m for v in slot)]
    return CartierTriple(len(shuffle.slots), P, Q)

def cartier_bijection(m, n):
    """Map each mixable (m,n)-shuffle to its Cartier triple."""
    return dict((s, cartier_triple_from_mixable(s))
                for s in enumerate_mixable_pair(m, n))

def _symbol_product(s, t, monoid):
    """Yield (symbol, sign) for the product of two symbols."""
    head = monoid.mul(s.head, t.head)
    if not s.bracket or not t.bracket:
        yield CartierSymbol(head, s.bracket + t.bracket), 1
        return
    for triple in enumerate_cartier_triples(len(s.bracket), len(t.bracket)):
        yield (CartierSymbol(head, triple.fill(s.bracket, t.bracket, monoid.mul)),
               triple.sign())

def cartier_product(a, b):
    a._check(b)
    terms = {}
    for s, c in a.terms.items():
        for t, d in b.terms.items():
            cd = c * d
            for symbol, sign in _symbol_product(s, t, a.monoid):
                accumulate(terms, symbol, cd if sign > 0 else -cd)
    return a._new(terms)

def cartier_operator(a):
    """P(u_0.[u_1, ..., u_m]) = 1.[u_0, u_1, ..., u_m]."""
    return a.map_keys(lambda s: CartierSymbol(ONE, s.word))

def embed_cartier(a):
    """The injective morphism u_0.[u_1, ..., u_m] -> u_0|u_1|...|u_m into
    the free Baxter algebra of weight -1.

    """
    return BaxElement(a.ring, a.monoid, dict(
        (s.word, c) for s, c in a.terms.items()))

class CartierAlgebra(BaxterAlgebra):
    """Cartier's algebra with its operator.  It has no identity, so it
    only satisfies the parts of the Baxter contract that avoid one().

    """
    name = 'Cartier algebra'

    def __init__(self, ring, monoid):
        self.ring, self.monoid = ring, monoid
        self.weight = Weight(-1, ring)

    def element(self, terms):
        return CartierElement(self.ring, self.monoid, terms)

    def generator(self, name):
        return CartierElement.symbol(self.ring, self.monoid,
                                     self.monoid.generator(name))

    def zero(self):
        return CartierElement(self.ring, self.monoid)

    def one(self):
        raise MixShuffleError('The Cartier algebra has no identity.')

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return cartier_product(a, b)

    def scale(self, c, a):
        return a.scale(c)

    def operator(self, a):
        return cartier_operator(a)

class CartierMorphism:
    """The morphism from Cartier's algebra to a Baxter algebra R of weight
    -1 sending x.[] to images[x] for each generator x.  Symbols are
    evaluated with R's product and operator only:

        u_0.[]                 -> phi(u_0)
        u_0.[u_1, ..., u_m]    -> phi(u_0) P(phi(u_1.[u_2, ..., u_m]))

    with the factor phi(u_0) left out when u_0 = 1.

    """
    def __init__(self, target, images, monoid):
        missing = [g for g in monoid.generators if g not in images]
        if missing:
            raise MixShuffleError('No image for generator(s) %s.' % ', '.join(missing))
        self.target, self.monoid = target, monoid
        self.images = dict((g, images[g]) for g in monoid.generators)

    def on_monomial(self, u):
        if u.is_one():
            raise MixShuffleError('The identity monomial has no image.')
        R, value = self.target, None
        for g, e in u.exponents:
            for _ in range(e):
                image = self.images[g]
                value = image if value is None else R.mul(value, image)
        return value

    def on_symbol(self, symbol):
        R, head, bracket = self.target, symbol.head, symbol.bracket
        if not bracket:
            return self.on_monomial(head)
        inner = R.operator(self.on_symbol(CartierSymbol(bracket[0], bracket[1:])))
        if head.is_one():
            return inner
        return R.mul(self.on_monomial(head), inner)

    def __call__(self, a):
        if a.monoid != self.monoid:
            raise MonoidMismatchError('The morphism is defined over another monoid.')
        R = self.target
        return R.sum(R.scale(c, self.on_symbol(s)) for s, c in a)

def factor_through(phi, R=None):
    """Return the Baxter algebra map from the free Baxter algebra of
    weight -1 to R which restricts to phi along embed_cartier.

    """
    R = phi.target if R is None else R
    if R is not phi.target:
        raise MixShuffleError('phi does not map into the given algebra.')
    if R.weight.value != -1:
        raise WeightMismatchError(
            'Cartier morphisms factor through Baxter algebras of weight -1, '
            'not %s.' % R.weight)
    logger.debug('Factoring a Cartier morphism through %r.', R)
    return UniversalMap(AlgebraMap(R, phi.images, phi.monoid))
