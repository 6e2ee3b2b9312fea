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

"""Text and JSON forms of algebra elements.

Tensor expressions are sums of words u_0 | u_1 | ... whose slots are
products of generator powers such as x^2*y; '1' is the identity
monomial and '()' the empty word.  A number appearing as a factor of
any slot scales the whole term, and a parenthesized word may be scaled
as in 2*(1|x*y).  Cartier symbols are written u0.[u1,u2] and Hurwitz
polynomials either as e0 + 3*e2 or as a coefficient sequence 1,0,3.

    >>> M = Monoid('u,v')
    >>> x = parse_tensor('1|u', INTEGERS, M)
    >>> render(augmented_product(x, parse_tensor('1|v', INTEGERS, M),
    ...                          Weight(-1)))
    '1|u|v + 1|v|u - 1|u*v'

"""

import logging
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError
from .monomials import ONE, Monomial, Monoid
from .coefficients import INTEGERS, Weight
from .shuffle_algebra import TensorCombination, PlusElement
from .baxter import BaxElement, augmented_product
from .cartier import CartierSymbol, CartierElement
from .hurwitz import HurwitzPolynomial
from .errors import MixShuffleError, ExpressionSyntaxError

logger = logging.getLogger('mixshuffle')

_common = r'''
    scalar: INT ["/" INT]
    SIGN: "+" | "-"
    NAME: /[A-Za-z_][A-Za-z_0-9]*/
    %import common.INT
    %import common.WS
    %ignore WS
'''

_slots = r'''
    slot: factor ("*" factor)*
    ?factor: NAME ["^" INT]     -> power
           | scalar
'''

tensor_grammar = r'''
    start: [SIGN] term (SIGN term)*
    ?term: word
         | group
         | scaled
    scaled: (scalar "*")+ group
    group: "(" [word] ")"
    word: slot ("|" slot)*
''' + _slots + _common

cartier_grammar = r'''
    start: [SIGN] term (SIGN term)*
    ?term: symbol
         | scaled
    scaled: (scalar "*")+ "(" symbol ")"
    symbol: slot "." "[" [slot ("," slot)*] "]"
''' + _slots + _common

hurwitz_grammar = r'''
    start: sequence
         | polynomial
    sequence: signed ("," signed)*
    signed: [SIGN] scalar
    polynomial: [SIGN] hterm (SIGN hterm)*
    hterm: [scalar ["*"]] BASIS
    BASIS: /e[0-9]+/
''' + _common

class _Builder(Transformer):
    """Build (coefficient, key) terms and then a term list."""

    def __init__(self, ring, monoid=None):
        Transformer.__init__(self)
        self.ring, self.monoid = ring, monoid

    def scalar(self, items):
        numerator, denominator = items
        if denominator is None:
            return self.ring.parse(str(numerator))
        return self.ring.parse('%s/%s' % (numerator, denominator))

    def power(self, items):
        name, exponent = items
        exponent = 1 if exponent is None else int(exponent)
        return self.monoid.monomial({str(name): exponent})

    def slot(self, items):
        coeff, monomial = self.ring.one, ONE
        for item in items:
            if isinstance(item, Monomial):
                monomial = self.monoid.mul(monomial, item)
            else:
                coeff = coeff * item
        return coeff, monomial

    def word(self, items):
        coeff = self.ring.one
        for c, _ in items:
            coeff = coeff * c
        return coeff, tuple(u for _, u in items)

    def group(self, items):
        if items[0] is None:
            return self.ring.one, ()
        return items[0]

    def scaled(self, items):
        coeff, key = items[-1]
        for scalar in items[:-1]:
            coeff = scalar * coeff
        return coeff, key

    def symbol(self, items):
        coeff, head = items[0]
        bracket = []
        for item in items[1:]:
            if item is not None:
                c, u = item
                coeff = coeff * c
                bracket.append(u)
        return coeff, CartierSymbol(head, bracket)

    def start(self, items):
        return self._signed_terms(items)

    polynomial = start

    def _signed_terms(self, items):
        terms, sign = [], None
        for item in items:
            if item is None or (hasattr(item, 'type') and item.type == 'SIGN'):
                sign = item
                continue
            coeff, key = item
            terms.append((key, -coeff if sign == '-' else coeff))
            sign = None
        return terms

    def hterm(self, items):
        scalar, basis = items[0], items[-1]
        return (self.ring.one if scalar is None else scalar), int(str(basis)[1:])

    def signed(self, items):
        sign, value = items
        return -value if sign == '-' else value

    def sequence(self, items):
        return list(enumerate(items))

class _HurwitzBuilder(_Builder):

    def start(self, items):
        return items[0]

_parsers = {}

def _parser(name):
    if name not in _parsers:
        grammar = {'tensor': tensor_grammar, 'cartier': cartier_grammar,
                   'hurwitz': hurwitz_grammar}[name]
        logger.debug('Building %s grammar', name)
        _parsers[name] = Lark(grammar, parser='earley', maybe_placeholders=True)
    return _parsers[name]

def _parse(name, src, builder):
    try:
        tree = _parser(name).parse(src)
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, MixShuffleError):
            raise e.orig_exc
        raise
    except UnexpectedInput as e:
        column = getattr(e, 'column', None)
        if column is None or column < 1:
            column = len(src) + 1
        expected = getattr(e, 'expected', None) or getattr(e, 'allowed', None) or ()
        raise ExpressionSyntaxError('Cannot parse %r' % src, column,
                                    sorted(set(str(t) for t in expected)))

def parse_tensor(src, ring, monoid, kind='bax'):
    """Parse a tensor expression into a BaxElement, or a PlusElement if
    kind is 'plus'.

    """
    terms = _parse('tensor', src, _Builder(ring, monoid))
    cls = {'bax': BaxElement, 'plus': PlusElement}[kind]
    return cls(ring, monoid, terms)

def parse_cartier(src, ring, monoid):
    return CartierElement(ring, monoid, _parse('cartier', src, _Builder(ring, monoid)))

def parse_hurwitz(src, ring):
    return HurwitzPolynomial(ring, _parse('hurwitz', src, _HurwitzBuilder(ring)))

def parse_expression(src, kind, ring, monoid=None):
    """Parse src as an element of kind 'bax', 'plus', 'cartier' or
    'hurwitz'.

    """
    if monoid is None:
        monoid = Monoid()
    if kind in ('bax', 'plus'):
        return parse_tensor(src, ring, monoid, kind)
    if kind == 'cartier':
        return parse_cartier(src, ring, monoid)
    if kind == 'hurwitz':
        return parse_hurwitz(src, ring)
    raise MixShuffleError('Unknown expression kind %r.' % kind)

def render_word(word):
    if not word:
        return '()'
    return '|'.join(str(u) for u in word)

def render_key(element, key):
    if isinstance(element, TensorCombination):
        return render_word(key)
    if isinstance(element, HurwitzPolynomial):
        return 'e%d' % key
    return str(key)

def _scaled(element, key, magnitude):
    body = render_key(element, key)
    if magnitude == 1:
        return body
    if isinstance(element, TensorCombination) and len(key) > 1:
        body = '(%s)' % body
    return '%s*%s' % (magnitude, body)

def render(element):
    """Render an element as text in canonical term order.  Negative
    coefficients become '-' separators.

    """
    if isinstance(element, CartierSymbol):
        return str(element)
    pieces = []
    for key, coeff in element:
        negative = coeff.is_negative()
        text = _scaled(element, key, -coeff if negative else coeff)
        if not pieces:
            pieces.append('-' + text if negative else text)
        else:
            pieces.append(('- ' if negative else '+ ') + text)
    return ' '.join(pieces) if pieces else '0'

def to_json_terms(element):
    """A JSON-ready list of terms."""
    result = []
    for key, coeff in element:
        if isinstance(element, TensorCombination):
            item = {'word': [str(u) for u in key]}
        elif isinstance(element, CartierElement):
            item = {'head': str(key.head), 'bracket': [str(u) for u in key.bracket]}
        else:
            item = {'index': key}
        item['coeff'] = str(coeff)
        result.append(item)
    return result
