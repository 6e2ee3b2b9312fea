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

from fractions import Fraction
import pytest
from mixshuffle.coefficients import INTEGERS, RATIONALS, Ring
from mixshuffle.monomials import ONE, Monoid
from mixshuffle.shuffle_algebra import PlusElement
from mixshuffle.baxter import BaxElement
from mixshuffle.cartier import CartierSymbol, CartierElement
from mixshuffle.hurwitz import HurwitzPolynomial
from mixshuffle.expressions import (parse_tensor, parse_cartier, parse_hurwitz,
                                    parse_expression, render, to_json_terms)
from mixshuffle.errors import (MixShuffleError, ExpressionSyntaxError,
                               UnknownGeneratorError, MalformedCoefficientError)

M = Monoid('x,y,z')
x, y, z = M.generator('x'), M.generator('y'), M.generator('z')

def test_tensor_expressions():
    a = parse_tensor('x|y + 2*(1|x*y)', INTEGERS, M)
    assert a == BaxElement(INTEGERS, M, {(x, y): 1, (ONE, x * y): 2})
    assert len(a) == 2
    assert parse_tensor('x^2*y|1', INTEGERS, M) == \
        BaxElement(INTEGERS, M, {(M.monomial({'x': 2, 'y': 1}), ONE): 1})

def test_scalars_inside_slots():
    assert parse_tensor('2*x|3*y', INTEGERS, M) == \
        BaxElement(INTEGERS, M, {(x, y): 6})
    assert parse_tensor('-x - 2*(y|z) + x', INTEGERS, M) == \
        BaxElement(INTEGERS, M, {(y, z): -2})
    assert parse_tensor('1/2*(x|y)', RATIONALS, M) == \
        BaxElement(RATIONALS, M, {(x, y): Fraction(1, 2)})

def test_plus_expressions():
    a = parse_tensor('() + 3*() + x', INTEGERS, M, 'plus')
    assert a == PlusElement(INTEGERS, M, {(): 4, (x,): 1})
    with pytest.raises(MixShuffleError):
        parse_tensor('()', INTEGERS, M)

def test_cartier_expressions():
    a = parse_cartier('x.[y,1*z]', INTEGERS, M)
    assert a.support() == [CartierSymbol(x, [y, z])]
    b = parse_cartier('x.[] - 2*(1.[x,y])', INTEGERS, M)
    assert b == CartierElement(INTEGERS, M, {CartierSymbol(x): 1,
                                             CartierSymbol(ONE, [x, y]): -2})

def test_hurwitz_expressions():
    a = parse_hurwitz('e0+3e2', INTEGERS)
    assert a.coefficients() == (1, 0, 3)
    assert parse_hurwitz('1,0,3', INTEGERS) == a
    assert parse_hurwitz('-1, 2', INTEGERS) == HurwitzPolynomial(
        INTEGERS, {0: -1, 1: 2})
    assert parse_hurwitz('2*e1 - e1', INTEGERS) == HurwitzPolynomial.basis(INTEGERS, 1)

def test_dispatch():
    assert parse_expression('e1', 'hurwitz', INTEGERS) == \
        HurwitzPolynomial.basis(INTEGERS, 1)
    assert parse_expression('1|1', 'bax', INTEGERS) == \
        BaxElement(INTEGERS, Monoid(), {(ONE, ONE): 1})
    with pytest.raises(MixShuffleError):
        parse_expression('x', 'matrix', INTEGERS, M)

def test_syntax_errors():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_tensor('x|+', INTEGERS, M)
    assert info.value.position == 3
    assert 'NAME' in info.value.expected
    assert len(set(info.value.expected)) == len(info.value.expected)
    assert 'column 3' in str(info.value)
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_tensor('x|', INTEGERS, M)
    assert info.value.position == 3
    with pytest.raises(ExpressionSyntaxError):
        parse_cartier('x.[y', INTEGERS, M)
    with pytest.raises(ExpressionSyntaxError):
        parse_hurwitz('e1 e2', INTEGERS)

def test_expected_terminals_are_distinct():
    error = ExpressionSyntaxError('Cannot parse', 2, ['NAME', 'INT', 'NAME', 'INT'])
    assert error.expected == ['INT', 'NAME']
    assert str(error).count('NAME') == 1

def test_semantic_errors():
    with pytest.raises(UnknownGeneratorError):
        parse_tensor('w|x', INTEGERS, M)
    with pytest.raises(MalformedCoefficientError):
        parse_tensor('1/2*x', INTEGERS, M)
    with pytest.raises(MixShuffleError):
        parse_cartier('1.[]', INTEGERS, M)
    with pytest.raises(MixShuffleError):
        parse_cartier('x.[y,1]', INTEGERS, M)

def test_render():
    a = BaxElement(INTEGERS, M, {(ONE, x, y): 1, (ONE, y, x): 1, (ONE, x * y): -1})
    assert render(a) == '1|x|y + 1|y|x - 1|x*y'
    assert render(BaxElement(INTEGERS, M, {(x,): -3, (x, y): 2})) == \
        '2*(x|y) - 3*x'
    assert render(BaxElement(INTEGERS, M)) == '0'
    assert render(PlusElement(INTEGERS, M, {(): -1})) == '-()'
    assert render(HurwitzPolynomial(INTEGERS, {3: 3, 5: 20})) == '3*e3 + 20*e5'
    assert render(CartierElement(INTEGERS, M, {CartierSymbol(x, [y]): 2})) == \
        '2*x.[y]'
    mod = Ring('mod', 7)
    assert render(BaxElement(mod, M, {(x,): -1})) == '6*x'

@pytest.mark.parametrize('src', ['1|x|y + 1|y|x - 1|x*y', '2*(x|y) - 3*x',
                                 'x^2*z|1|y', '-x'])
def test_rendered_text_parses_back(src):
    a = parse_tensor(src, INTEGERS, M)
    assert render(a) == src
    assert parse_tensor(render(a), INTEGERS, M) == a

def test_json_terms():
    a = parse_tensor('2*(1|x*y)', INTEGERS, M)
    assert to_json_terms(a) == [{'word': ['1', 'x*y'], 'coeff': '2'}]
    b = parse_cartier('x.[y]', RATIONALS, M).scale(Fraction(1, 2))
    assert to_json_terms(b) == [{'head': 'x', 'bracket': ['y'], 'coeff': '1/2'}]
    assert to_json_terms(parse_hurwitz('e2', INTEGERS)) == \
        [{'index': 2, 'coeff': '1'}]
