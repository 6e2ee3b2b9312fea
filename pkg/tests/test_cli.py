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

import json
import pytest
from mixshuffle import cli
from mixshuffle.cli import run
from mixshuffle.targets import CoefficientAlgebra

def test_count_golden(environ, golden):
    status, text = run(['count', '--m', '1', '--n', '1'], environ)
    assert status == 0
    assert text + '\n' == golden('count_1_1.txt')

def test_product_golden(environ, golden):
    status, text = run(['product', '--lambda', '-1', '--alphabet', 'u,v',
                        '1|u', '1|v'], environ)
    assert status == 0
    assert text + '\n' == golden('product_uv.txt')

def test_baxter_check_golden(environ, golden):
    status, text = run(['baxter-check', '--target', 'hurwitz', '--lambda', '0',
                        '--samples', '50', '--seed', '7'], environ)
    assert status == 0
    assert text + '\n' == golden('baxter_check_hurwitz.txt')

def test_count_variants(environ):
    assert run(['count', '--m', '2', '--n', '1', '--by-merges'], environ) == \
        (0, '0: 3\n1: 2')
    assert run(['count', '--m', '1', '--n', '1', '--l', '1'], environ) == (0, '13')
    status, text = run(['count', '--m', '2', '--n', '2', '--format', 'json',
                        '--by-merges'], environ)
    assert json.loads(text) == {'m': 2, 'n': 2, 'count': 13,
                                'by_merges': [6, 6, 1]}
    assert run(['count', '--m', '-1', '--n', '1'], environ)[0] == 2

def test_enumerate(environ):
    status, text = run(['enumerate', '--m', '1', '--n', '1'], environ)
    assert text.splitlines() == ['sigma=[1,2] T=[] degree=0',
                                 'sigma=[1,2] T=[(1,2)] degree=1',
                                 'sigma=[2,1] T=[] degree=0']
    status, text = run(['enumerate', '--m', '1', '--n', '1', '--l', '1',
                        '--format', 'json'], environ)
    data = json.loads(text)
    assert data['l'] == 1 and len(data['items']) == 13
    assert {'sigma': [1, 2, 3], 'merges': [[1, 2, 3]], 'degree': 2} in data['items']

def test_product_options(environ):
    assert run(['product', '--plus', '--lambda', '2', '--alphabet', 'x,y',
                'x', 'y'], environ) == (0, 'x|y + y|x + 2*x*y')
    assert run(['product', '--q', '1', '--alphabet', 'u,v', '1|u', '1|v'],
               environ) == (0, '1|u|v + 1|v|u - 1|u*v')
    status, text = run(['product', '--ring', 'mod:3', '--lambda', '-1',
                        '--alphabet', 'u,v', '1|u', '1|v'], environ)
    assert text == '1|u|v + 1|v|u + 2*(1|u*v)'
    status, text = run(['product', '--format', 'json', '--alphabet', 'u',
                        'u', '2*u'], environ)
    assert json.loads(text) == [{'word': ['u^2'], 'coeff': '2'}]

def test_input_errors(environ):
    status, text = run(['product', '--alphabet', 'u', '1|w', 'u'], environ)
    assert status == 2 and text.startswith('mixshuffle: error:')
    status, text = run(['product', '--alphabet', 'u', '1|', 'u'], environ)
    assert status == 2 and 'column 3' in text
    assert run(['product', '--ring', 'real', 'u', 'u'], environ)[0] == 2
    assert run(['frobnicate'], environ)[0] == 2

@pytest.mark.parametrize('target,weight', [('sha', '1'), ('sha', '-1'),
                                           ('zero', '3'), ('scalar', '-2'),
                                           ('sums', '1'), ('sums', '-1')])
def test_baxter_check_targets(environ, target, weight):
    status, text = run(['baxter-check', '--target', target, '--lambda', weight,
                        '--alphabet', 'x,y', '--samples', '10'], environ)
    assert status == 0, text
    assert text == 'baxter identity holds on 10 samples (target %s, lambda %s)' % (
        target, weight)

def test_baxter_check_errors(environ):
    status, text = run(['baxter-check', '--target', 'hurwitz', '--lambda', '1'],
                       environ)
    assert status == 2
    assert run(['baxter-check', '--target', 'sums', '--lambda', '2'], environ)[0] == 2

def test_baxter_check_json(environ):
    status, text = run(['baxter-check', '--target', 'hurwitz', '--samples', '5',
                        '--format', 'json'], environ)
    assert json.loads(text) == {'identity': 'baxter', 'holds': True, 'samples': 5,
                                'target': 'hurwitz', 'lambda': '0'}

def test_cartier(environ):
    assert run(['cartier', '--alphabet', 'x,y', '1.[x]', '1.[y]'], environ) == \
        (0, '1.[x,y] + 1.[y,x] - 1.[x*y]')
    assert run(['cartier', '--alphabet', 'x,y', '--embed', '1.[x]', '1.[y]'],
               environ) == (0, '1|x|y + 1|y|x - 1|x*y')
    assert run(['cartier', '--alphabet', 'x', 'x.[]'], environ) == (0, 'x.[]')
    assert run(['cartier', '--alphabet', 'x', '1.[]'], environ)[0] == 2
    assert run(['cartier', '--alphabet', 'x', 'x.[]', 'x.[]', 'x.[]'],
               environ)[0] == 2

def test_hurwitz(environ):
    assert run(['hurwitz', 'mul', 'e1+2e3', 'e2'], environ) == (0, '3*e3 + 20*e5')
    assert run(['hurwitz', 'shift', '1,0,3'], environ) == (0, 'e1 + 3*e3')
    assert run(['hurwitz', 'embed', '3*(1|1) + 1'], environ) == (0, 'e0 + 3*e1')
    assert run(['hurwitz', 'mul', '--expr', 'e1', '--expr', 'e1'], environ) == \
        (0, '2*e2')
    assert run(['hurwitz', 'embed', '--lambda', '1', '1|1'], environ)[0] == 2
    assert run(['hurwitz', 'mul', 'e1'], environ)[0] == 2

def test_eval(environ):
    assert run(['eval', '--target', 'hurwitz', '--alphabet', 'x', '--image',
                'x=e1', '1|x'], environ) == (0, 'e2')
    assert run(['eval', '--target', 'sums', '--lambda', '1', '--size', '3',
                '1|1|1'], environ) == (0, '(0, 0, 1)')
    assert run(['eval', '--target', 'scalar', '--lambda', '2', '1|1|1'],
               environ) == (0, '4')
    assert run(['eval', '--alphabet', 'x,y', '--image', 'x=y', '--image',
                'y=y', 'x|x + 2*x'], environ) == (0, 'y|y + 2*y')
    assert run(['eval', '--alphabet', 'x', '1|x'], environ)[0] == 2
    assert run(['eval', '--alphabet', 'x', '--image', 'x', 'x'], environ)[0] == 2

@pytest.mark.parametrize('target,weight', [('sha', '-1'), ('hurwitz', '0'),
                                           ('sums', '1'), ('scalar', '3')])
def test_expand_prop(environ, target, weight):
    status, text = run(['expand-prop', '--m', '2', '--n', '2', '--target', target,
                        '--lambda', weight, '--alphabet', 'x', '--samples', '3'],
                       environ)
    assert status == 0, text
    assert text == 'product expansion holds for m=2, n=2 on 3 samples ' \
        '(target %s, lambda %s)' % (target, weight)
    assert run(['expand-prop', '--m', '0', '--n', '2'], environ)[0] == 2

class IdentityOperatorAlgebra(CoefficientAlgebra):

    def operator(self, a):
        return a

def test_failing_check_prints_a_witness(environ, monkeypatch):
    monkeypatch.setattr(cli, 'make_target', lambda name, settings, size=6:
                        IdentityOperatorAlgebra(settings.ring, settings.weight))
    status, text = run(['baxter-check', '--lambda', '0', '--samples', '20'],
                       environ)
    assert status == 1
    lines = text.splitlines()
    assert lines[0].startswith('baxter identity fails at x = ')
    assert lines[1].startswith('  lhs: ') and lines[2].startswith('  rhs: ')

def test_config_defaults(tmp_path):
    path = tmp_path / 'mixshuffle.conf'
    path.write_text('[mixshuffle]\nlambda = -1\nalphabet = u,v\nformat = json\n')
    status, text = run(['product', '1|u', '1|v'], {'MIXSHUFFLE_CONFIG': str(path)})
    assert json.loads(text)[2] == {'word': ['1', 'u*v'], 'coeff': '-1'}
    status, text = run(['product', '--format', 'text', '1|u', '1|v'],
                       {'MIXSHUFFLE_CONFIG': str(path)})
    assert text == '1|u|v + 1|v|u - 1|u*v'
