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

"""Free Baxter algebras.

A Baxter algebra of weight lambda is a commutative algebra R with a
linear operator P satisfying

    P(x)P(y) = P(xP(y)) + P(yP(x)) + lambda P(xy).

The free one on A = C<M> is Sha(A) = A (x) Sha+(A), spanned by words
u_0|u_1|...|u_k with k >= 0.  Its product multiplies the slot-0
monomials and shuffles the tails with the mixable shuffle product, and
its operator P_A prefixes the word with 1.

"""

import logging
from abc import ABC, abstractmethod
from itertools import product as cartesian
from .monomials import ONE, Polynomial, accumulate
from .shuffle_algebra import TensorCombination, shuffle_words
from .shuffles import enumerate_mixable_pair, apply_slots
from .errors import (MixShuffleError, RingMismatchError, WeightMismatchError,
                     MonoidMismatchError)

logger = logging.getLogger('mixshuffle')

class BaxElement(TensorCombination):
    """An element of the free Baxter algebra Sha(A).  Words are nonempty
    and slot 0 is the A-factor.

    """
    min_length = 1

    @classmethod
    def identity(cls, ring, monoid):
        return cls(ring, monoid, {(ONE,): 1})

    @classmethod
    def generator(cls, ring, monoid, name):
        return cls(ring, monoid, {(monoid.generator(name),): 1})

def augmented_product(x, y, weight):
    """The augmented mixable shuffle product of weight lambda:
    (x_0|xbar) * (y_0|ybar) = x_0 y_0 (x) (xbar *+ ybar).

    """
    x._check(y)
    if weight.ring != x.ring:
        raise RingMismatchError('The weight lives in %s, the operands in %s.' % (
            weight.ring, x.ring))
    terms, monoid = {}, x.monoid
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            c = cx * cy
            head = (monoid.mul(wx[0], wy[0]),)
            for tail, degree in shuffle_words(wx[1:], wy[1:], monoid):
                accumulate(terms, head + tail, c * weight.power(degree))
    return x._new(terms)

def baxter_operator(x):
    """P_A(u_0|...|u_k) = 1|u_0|...|u_k, extended linearly."""
    return x.map_keys(lambda word: (ONE,) + word)

class BaxterAlgebra(ABC):
    """The contract every Baxter algebra implements: the ring operations,
    the scalar action of C, the operator and a declared weight.

    Implementations set the attributes ring and weight.  Elements are
    whatever the implementation chooses; they are only combined through
    these methods.

    """
    name = 'baxter algebra'

    @abstractmethod
    def zero(self):
        pass

    @abstractmethod
    def one(self):
        pass

    @abstractmethod
    def add(self, a, b):
        pass

    @abstractmethod
    def mul(self, a, b):
        pass

    @abstractmethod
    def scale(self, c, a):
        pass

    @abstractmethod
    def operator(self, a):
        pass

    def neg(self, a):
        return self.scale(-self.ring.one, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def equal(self, a, b):
        return a == b

    def sum(self, elements):
        total = self.zero()
        for element in elements:
            total = self.add(total, element)
        return total

    def render(self, a):
        return str(a)

    def __repr__(self):
        return '<%s of weight %s over %s>' % (self.name, self.weight, self.ring)

class FreeBaxterAlgebra(BaxterAlgebra):
    """(Sha(A), P_A) for A = C<M>."""
    name = 'free Baxter algebra'

    def __init__(self, ring, monoid, weight):
        if weight.ring != ring:
            raise RingMismatchError('The weight must live in %s.' % ring)
        self.ring, self.monoid, self.weight = ring, monoid, weight

    def element(self, terms):
        return BaxElement(self.ring, self.monoid, terms)

    def generator(self, name):
        return BaxElement.generator(self.ring, self.monoid, name)

    def zero(self):
        return BaxElement(self.ring, self.monoid)

    def one(self):
        return BaxElement.identity(self.ring, self.monoid)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return augmented_product(a, b, self.weight)

    def scale(self, c, a):
        return a.scale(c)

    def operator(self, a):
        return baxter_operator(a)

class IdentityCheck:
    """The outcome of checking an identity.  True when it holds; on
    failure lhs and rhs are the witness.

    """
    def __init__(self, holds, lhs=None, rhs=None, label=''):
        self.holds, self.lhs, self.rhs, self.label = holds, lhs, rhs, label

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return '<%s holds>' % (self.label or 'identity')
        return '<%s fails: %s != %s>' % (self.label or 'identity',
                                         self.lhs, self.rhs)

def check_baxter_identity(R, x, y):
    """Check P(x)P(y) = P(xP(y)) + P(yP(x)) + lambda P(xy) in R."""
    P = R.operator
    lhs = R.mul(P(x), P(y))
    rhs = R.sum([P(R.mul(x, P(y))), P(R.mul(y, P(x))),
                 R.scale(R.weight.value, P(R.mul(x, y)))])
    holds = R.equal(lhs, rhs)
    if not holds:
        logger.warning('Baxter identity fails in %r: %s != %s', R, lhs, rhs)
    return IdentityCheck(holds, lhs, rhs, 'Baxter identity')

class AlgebraMap:
    """An algebra map phi: C<M> -> R, determined by the images of the
    generators.  The images must satisfy the monoid's relations.

    """
    def __init__(self, target, images, monoid):
        missing = [g for g in monoid.generators if g not in images]
        if missing:
            raise MixShuffleError('No image for generator(s) %s.' % ', '.join(missing))
        self.target, self.monoid = target, monoid
        self.images = dict((g, images[g]) for g in monoid.generators)
        self._cache = {}

    def __call__(self, monomial):
        if monomial not in self._cache:
            R, value = self.target, self.target.one()
            for g, e in monomial.exponents:
                for _ in range(e):
                    value = R.mul(value, self.images[g])
            self._cache[monomial] = value
        return self._cache[monomial]

    def on_polynomial(self, polynomial):
        R = self.target
        return R.sum(R.scale(c, self(u)) for u, c in polynomial.terms.items())

def iterated_operator(R, elements):
    """(P_{e_1} o ... o P_{e_k})(1_R) where P_e(y) = P(ey)."""
    value = R.one()
    for element in reversed(elements):
        value = R.operator(R.mul(element, value))
    return value

class UniversalMap:
    """The Baxter algebra map extending phi from A to Sha(A):

        u_0|u_1|...|u_k  ->  phi(u_0) (P_{phi(u_1)} o ... o P_{phi(u_k)})(1_R)

    extended linearly.

    """
    def __init__(self, phi, weight=None):
        if weight is not None and weight != phi.target.weight:
            raise WeightMismatchError(
                'The target has weight %s but weight %s was requested.' % (
                    phi.target.weight, weight))
        self.phi, self.target = phi, phi.target
        self._cache = {}

    def on_word(self, word):
        if word not in self._cache:
            R, phi = self.target, self.phi
            tail = iterated_operator(R, [phi(u) for u in word[1:]])
            self._cache[word] = R.mul(phi(word[0]), tail)
        return self._cache[word]

    def __call__(self, x):
        if x.monoid != self.phi.monoid:
            raise MonoidMismatchError('The map is defined over another monoid.')
        R = self.target
        return R.sum(R.scale(c, self.on_word(word)) for word, c in x)

def universal_map(phi, R, x, weight=None):
    """Evaluate the universal map of phi at x.  phi is an AlgebraMap or
    a dict of generator images in R.

    """
    if not isinstance(phi, AlgebraMap):
        phi = AlgebraMap(R, phi, x.monoid)
    elif phi.target is not R:
        raise MixShuffleError('phi does not map into the given algebra.')
    return UniversalMap(phi, weight)(x)

def check_product_expansion(R, xs, ys):
    """Check that the product of (o_r P_{x_r})(1) and (o_s P_{y_s})(1)
    equals the sum over mixable (m,n)-shuffles (sigma, T) of
    lambda^|T| times the iterated operator of the shuffled arguments,
    merged arguments being multiplied.

    """
    m, n = len(xs), len(ys)
    if m < 1 or n < 1:
        raise MixShuffleError('The expansion needs m, n >= 1.')
    lhs = R.mul(iterated_operator(R, xs), iterated_operator(R, ys))
    values, terms = list(xs) + list(ys), []
    for shuffle in enumerate_mixable_pair(m, n):
        shuffled = apply_slots(values, shuffle.slots, R.mul)
        terms.append(R.scale(R.weight.power(shuffle.degree),
                             iterated_operator(R, shuffled)))
    rhs = R.sum(terms)
    return IdentityCheck(R.equal(lhs, rhs), lhs, rhs, 'product expansion')

def check_homomorphism(R, S, f, elements, unital=True):
    """Check that f: R -> S is additive, multiplicative and commutes
    with the operators on all pairs of the given elements, and, if
    unital, that it preserves the identity.

    """
    if unital:
        lhs, rhs = f(R.one()), S.one()
        if not S.equal(lhs, rhs):
            return IdentityCheck(False, lhs, rhs, 'unit')
    for i, a in enumerate(elements):
        lhs, rhs = f(R.operator(a)), S.operator(f(a))
        if not S.equal(lhs, rhs):
            return IdentityCheck(False, lhs, rhs, 'operator')
        for b in elements[i:]:
            lhs, rhs = f(R.add(a, b)), S.add(f(a), f(b))
            if not S.equal(lhs, rhs):
                return IdentityCheck(False, lhs, rhs, 'additivity')
            lhs, rhs = f(R.mul(a, b)), S.mul(f(a), f(b))
            if not S.equal(lhs, rhs):
                return IdentityCheck(False, lhs, rhs, 'multiplicativity')
    return IdentityCheck(True, label='homomorphism')

class Substitution:
    """An algebra map f: C<M> -> C<N> given by the polynomial images of
    the generators of M.

    """
    def __init__(self, ring, source, target, images):
        self.ring, self.source, self.target = ring, source, target
        self.images = {}
        for g in source.generators:
            image = images[g]
            if not isinstance(image, Polynomial):
                image = Polynomial.from_monomial(ring, target, image)
            if image.monoid != target or image.ring != ring:
                raise MonoidMismatchError('The image of %s is not in C<%s>.' % (
                    g, target))
            self.images[g] = image

    @classmethod
    def identity(cls, ring, monoid):
        return cls(ring, monoid, monoid, dict(
            (g, monoid.generator(g)) for g in monoid.generators))

    def __call__(self, monomial):
        value = Polynomial.from_monomial(self.ring, self.target, ONE)
        for g, e in monomial.exponents:
            for _ in range(e):
                value = value * self.images[g]
        return value

    def on_polynomial(self, polynomial):
        value = Polynomial(self.ring, self.target)
        for u, c in polynomial.terms.items():
            value = value + self(u).scale(c)
        return value

    def then(self, other):
        """The composite other o self."""
        return Substitution(self.ring, self.source, other.target, dict(
            (g, other.on_polynomial(self.images[g])) for g in self.source.generators))

def functor_map(f, x):
    """Apply the Substitution f slot by slot to x in Sha(C<M>)."""
    if x.monoid != f.source:
        raise MonoidMismatchError('The element is not over the source monoid.')
    terms = {}
    for word, c in x.terms.items():
        images = [list(f(u).terms.items()) for u in word]
        for choice in cartesian(*images):
            coeff = c
            for _, a in choice:
                coeff = coeff * a
            accumulate(terms, tuple(u for u, _ in choice), coeff)
    return type(x)(x.ring, f.target, terms)

def generator_span_words(basis, depth, max_factors, monoid):
    """The words u_0|...|u_r with r <= depth whose slots are products of
    at most max_factors basis monomials.  They span, as an additive
    group, the part of the Baxter subalgebra generated by the basis that
    these bounds allow.

    """
    if depth < 0 or max_factors < 0:
        raise MixShuffleError('Bounds must be natural numbers.')
    values, layer = set([ONE]), set([ONE])
    for _ in range(max_factors):
        layer = set(monoid.mul(u, monoid.validate(b)) for u in layer for b in basis)
        values |= layer
    values = sorted(values, key=lambda u: u.key)
    words = []
    for r in range(depth + 1):
        words.extend(cartesian(values, repeat=r + 1))
    words.sort(key=lambda w: (len(w), tuple(u.key for u in w)))
    return words
