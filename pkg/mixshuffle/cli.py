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

import sys, json, logging
from argparse import ArgumentParser
from .coefficients import INTEGERS, Weight, parse_ring
from .monomials import Monoid, LinearCombination
from .shuffles import (count_mixable_pair, count_mixable_pair_by_merges,
                       count_mixable_triple, count_mixable_triple_by_degree,
                       enumerate_mixable_pair, enumerate_mixable_triple)
from .shuffle_algebra import mixable_product_plus
from .baxter import (FreeBaxterAlgebra, AlgebraMap, UniversalMap,
                     augmented_product, check_baxter_identity,
                     check_product_expansion)
from .targets import ZeroOperatorAlgebra, ScalarOperatorAlgebra, partial_sum_algebra
from .hurwitz import HurwitzAlgebra, hurwitz_mul, hurwitz_shift, embed_sha_c
from .cartier import cartier_product, embed_cartier
from .expressions import (parse_tensor, parse_cartier, parse_hurwitz, render,
                          to_json_terms)
from .sampling import Sampler
from .config import Config, FORMATS
from .errors import MixShuffleError, WeightMismatchError

logger = logging.getLogger('mixshuffle')

TARGETS = ('sha', 'hurwitz', 'zero', 'scalar', 'sums')

common = ArgumentParser(add_help=False)
common.add_argument(
    '--ring', help='coefficient ring: int, rat or mod:N (default int)')
common.add_argument(
    '--lambda', dest='weight', metavar='L',
    help='the weight lambda, a literal in the ring (default 1)')
common.add_argument(
    '--q', metavar='Q', help='give the weight as q = -lambda instead')
common.add_argument(
    '--alphabet', help='comma separated generator names, e.g. x,y,z')
common.add_argument(
    '--format', choices=FORMATS, help='output format (default text)')
common.add_argument(
    '--seed', type=int, help='seed for randomized checks (default 0)')
common.add_argument(
    '--debug', action='store_true', help='log to stderr at DEBUG level')

parser = ArgumentParser(prog='mixshuffle', description="""
Compute with mixable shuffles and free Baxter algebras of weight lambda,
and check their identities on random samples.
""")
subparsers = parser.add_subparsers(dest='command', metavar='command')
subparsers.required = True

sub = subparsers.add_parser('count', parents=[common],
                            help='count mixable (m,n)- or (m,n,l)-shuffles')
sub.add_argument('--m', type=int, required=True)
sub.add_argument('--n', type=int, required=True)
sub.add_argument('--l', type=int)
sub.add_argument('--by-merges', action='store_true',
                 help='count by number of merges (by degree for triples)')

sub = subparsers.add_parser('enumerate', parents=[common],
                            help='list mixable (m,n)- or (m,n,l)-shuffles')
sub.add_argument('--m', type=int, required=True)
sub.add_argument('--n', type=int, required=True)
sub.add_argument('--l', type=int)

sub = subparsers.add_parser('product', parents=[common],
                            help='multiply two elements of the free Baxter algebra')
sub.add_argument('left')
sub.add_argument('right')
sub.add_argument('--plus', action='store_true',
                 help='use the mixable shuffle algebra instead')

sub = subparsers.add_parser('baxter-check', parents=[common],
                            help='check the Baxter identity on random pairs')
sub.add_argument('--target', choices=TARGETS, default='sha')
sub.add_argument('--samples', type=int, default=100)
sub.add_argument('--size', type=int, default=6,
                 help='number of coordinates of the sums target')

sub = subparsers.add_parser('cartier', parents=[common],
                            help="multiply Cartier symbols such as 'x.[y,z]'")
sub.add_argument('symbols', nargs='+', metavar='symbol')
sub.add_argument('--embed', action='store_true',
                 help='print the image in the free Baxter algebra')

sub = subparsers.add_parser('hurwitz', parents=[common],
                            help='Hurwitz polynomials and the embedding of Sha(C)')
sub.add_argument('action', choices=('mul', 'embed', 'shift'))
sub.add_argument('exprs', nargs='*', metavar='expr')
sub.add_argument('--expr', action='append', default=[], dest='extra')

sub = subparsers.add_parser('eval', parents=[common],
                            help='apply the universal map to an element')
sub.add_argument('expr')
sub.add_argument('--target', choices=TARGETS, default='sha')
sub.add_argument('--image', action='append', default=[], metavar='g=VALUE',
                 help='the image of the generator g')
sub.add_argument('--size', type=int, default=6)

sub = subparsers.add_parser('expand-prop', parents=[common],
                            help='check the mixable shuffle expansion of a '
                            'product of iterated operators')
sub.add_argument('--m', type=int, required=True)
sub.add_argument('--n', type=int, required=True)
sub.add_argument('--target', choices=TARGETS, default='sha')
sub.add_argument('--samples', type=int, default=10)
sub.add_argument('--size', type=int, default=6)

class Settings:
    """Command line options merged with the config file defaults."""

    def __init__(self, args, config):
        self.ring = parse_ring(args.ring) if args.ring else config.ring()
        self.monoid = Monoid(args.alphabet) if args.alphabet is not None \
            else config.alphabet()
        self.format = args.format or config.format()
        self.seed = args.seed if args.seed is not None else config.seed()
        self.explicit_weight = args.q is not None or args.weight is not None
        if args.q is not None:
            self.weight = Weight.from_q(self.ring.parse(args.q))
        elif args.weight is not None:
            self.weight = Weight(self.ring.parse(args.weight))
        else:
            self.weight = config.weight(self.ring)

    def weight_or_zero(self):
        """The weight, defaulting to 0 where only weight 0 makes sense."""
        return self.weight if self.explicit_weight else Weight(0, self.ring)

def show(R, value):
    if isinstance(value, LinearCombination):
        return render(value)
    return R.render(value)

def emit(settings, text, data):
    if settings.format == 'json':
        return json.dumps(data, sort_keys=True)
    return text

def make_target(name, settings, size=6):
    ring = settings.ring
    if name == 'sha':
        return FreeBaxterAlgebra(ring, settings.monoid, settings.weight)
    if name == 'hurwitz':
        weight = settings.weight_or_zero()
        if not weight.is_zero():
            raise WeightMismatchError(
                'The Hurwitz target has weight 0, not %s.' % weight)
        return HurwitzAlgebra(ring)
    if name == 'zero':
        return ZeroOperatorAlgebra(ring, settings.weight)
    if name == 'scalar':
        return ScalarOperatorAlgebra(ring, settings.weight)
    return partial_sum_algebra(ring, size, settings.weight)

def do_count(args, settings):
    m, n, l = args.m, args.n, args.l
    if min(m, n, 0 if l is None else l) < 0:
        raise MixShuffleError('Block sizes must be natural numbers.')
    data = {'m': m, 'n': n}
    if l is None:
        total = count_mixable_pair(m, n, INTEGERS)
        parts = [(i, count_mixable_pair_by_merges(m, n, i, INTEGERS))
                 for i in range(n + 1)]
    else:
        data['l'] = l
        total = count_mixable_triple(m, n, l, INTEGERS)
        parts = [(k, count_mixable_triple_by_degree(m, n, l, k, INTEGERS))
                 for k in range(n + l + 1)]
    data['count'] = total.value
    if not args.by_merges:
        return 0, emit(settings, str(total), data)
    data['by_merges'] = [c.value for _, c in parts]
    return 0, emit(settings, '\n'.join('%d: %s' % (i, c) for i, c in parts), data)

def do_enumerate(args, settings):
    m, n, l = args.m, args.n, args.l
    if min(m, n, 0 if l is None else l) < 0:
        raise MixShuffleError('Block sizes must be natural numbers.')
    data = {'m': m, 'n': n, 'items': []}
    lines = []
    if l is None:
        shuffles = enumerate_mixable_pair(m, n)
        merge_lists = [[list(pair) for pair in s.merges] for s in shuffles]
    else:
        data['l'] = l
        shuffles = enumerate_mixable_triple(m, n, l)
        merge_lists = [[list(w.positions) for w in s.merges] for s in shuffles]
    for shuffle, merges in zip(shuffles, merge_lists):
        data['items'].append({'sigma': list(shuffle.sigma), 'merges': merges,
                              'degree': shuffle.degree})
        lines.append('sigma=[%s] T=[%s] degree=%d' % (
            ','.join(str(v) for v in shuffle.sigma),
            ','.join('(%s)' % ','.join(str(k) for k in merge) for merge in merges),
            shuffle.degree))
    return 0, emit(settings, '\n'.join(lines), data)

def do_product(args, settings):
    ring, monoid, weight = settings.ring, settings.monoid, settings.weight
    if args.plus:
        x = parse_tensor(args.left, ring, monoid, 'plus')
        y = parse_tensor(args.right, ring, monoid, 'plus')
        result = mixable_product_plus(x, y, weight)
    else:
        x = parse_tensor(args.left, ring, monoid)
        y = parse_tensor(args.right, ring, monoid)
        result = augmented_product(x, y, weight)
    return 0, emit(settings, render(result), to_json_terms(result))

def witness(R, label, args, check):
    lines = ['%s fails at %s' % (label, ', '.join(
        '%s = %s' % (name, show(R, value)) for name, value in args))]
    lines.append('  lhs: %s' % show(R, check.lhs))
    lines.append('  rhs: %s' % show(R, check.rhs))
    return '\n'.join(lines)

def do_baxter_check(args, settings):
    R = make_target(args.target, settings, args.size)
    sampler = Sampler(settings.seed)
    for _ in range(args.samples):
        x, y = sampler.element(R), sampler.element(R)
        check = check_baxter_identity(R, x, y)
        if not check:
            return 1, witness(R, 'baxter identity', [('x', x), ('y', y)], check)
    message = 'baxter identity holds on %d samples (target %s, lambda %s)' % (
        args.samples, args.target, R.weight)
    return 0, emit(settings, message, {'identity': 'baxter', 'holds': True,
                                       'samples': args.samples,
                                       'target': args.target,
                                       'lambda': str(R.weight)})

def do_cartier(args, settings):
    if len(args.symbols) > 2:
        raise MixShuffleError('Give one symbol expression, or two to multiply.')
    ring, monoid = settings.ring, settings.monoid
    elements = [parse_cartier(src, ring, monoid) for src in args.symbols]
    result = elements[0]
    if len(elements) == 2:
        result = cartier_product(elements[0], elements[1])
    if args.embed:
        result = embed_cartier(result)
    return 0, emit(settings, render(result), to_json_terms(result))

def do_hurwitz(args, settings):
    ring, exprs = settings.ring, args.exprs + args.extra
    arity = {'mul': 2, 'embed': 1, 'shift': 1}[args.action]
    if len(exprs) != arity:
        raise MixShuffleError('hurwitz %s takes %d expression(s).' % (
            args.action, arity))
    if args.action == 'mul':
        result = hurwitz_mul(parse_hurwitz(exprs[0], ring),
                             parse_hurwitz(exprs[1], ring))
    elif args.action == 'shift':
        result = hurwitz_shift(parse_hurwitz(exprs[0], ring))
    else:
        x = parse_tensor(exprs[0], ring, Monoid())
        result = embed_sha_c(x, settings.weight_or_zero())
    return 0, emit(settings, render(result), to_json_terms(result))

def parse_image(R, name, src, settings):
    if isinstance(R, FreeBaxterAlgebra):
        return parse_tensor(src, settings.ring, settings.monoid)
    if isinstance(R, HurwitzAlgebra):
        return parse_hurwitz(src, settings.ring)
    if name == 'sums':
        return R.vector(settings.ring.parse(v) for v in src.split(','))
    return settings.ring.parse(src)

def do_eval(args, settings):
    R = make_target(args.target, settings, args.size)
    images = {}
    for item in args.image:
        name, sep, src = item.partition('=')
        if not sep:
            raise MixShuffleError('Images are given as g=VALUE, not %r.' % item)
        images[name.strip()] = parse_image(R, args.target, src, settings)
    x = parse_tensor(args.expr, settings.ring, settings.monoid)
    requested = settings.weight_or_zero() if args.target == 'hurwitz' \
        else settings.weight
    phi = UniversalMap(AlgebraMap(R, images, settings.monoid), requested)
    result = phi(x)
    data = to_json_terms(result) if isinstance(result, LinearCombination) \
        else show(R, result)
    return 0, emit(settings, show(R, result), data)

def do_expand_prop(args, settings):
    if args.m < 1 or args.n < 1:
        raise MixShuffleError('The expansion needs m, n >= 1.')
    R = make_target(args.target, settings, args.size)
    sampler = Sampler(settings.seed)
    for _ in range(args.samples):
        xs = [sampler.element(R) for _ in range(args.m)]
        ys = [sampler.element(R) for _ in range(args.n)]
        check = check_product_expansion(R, xs, ys)
        if not check:
            named = [('x%d' % i, x) for i, x in enumerate(xs, 1)] + \
                [('y%d' % i, y) for i, y in enumerate(ys, 1)]
            return 1, witness(R, 'product expansion', named, check)
    message = 'product expansion holds for m=%d, n=%d on %d samples ' \
        '(target %s, lambda %s)' % (args.m, args.n, args.samples, args.target,
                                    R.weight)
    return 0, emit(settings, message, {'identity': 'product expansion',
                                       'holds': True, 'm': args.m, 'n': args.n,
                                       'samples': args.samples,
                                       'target': args.target,
                                       'lambda': str(R.weight)})

commands = {
    'count': do_count,
    'enumerate': do_enumerate,
    'product': do_product,
    'baxter-check': do_baxter_check,
    'cartier': do_cartier,
    'hurwitz': do_hurwitz,
    'eval': do_eval,
    'expand-prop': do_expand_prop,
}

def run(argv=None, environ=None):
    """Run one command.  Returns (exit status, output text): 0 on success,
    1 when a checked identity fails and 2 for usage or input errors.

    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else 2), ''
    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    try:
        settings = Settings(args, Config(environ=environ))
        return commands[args.command](args, settings)
    except MixShuffleError as e:
        logger.debug('%s failed: %r', args.command, e)
        return 2, 'mixshuffle: error: %s' % e

def main():
    status, text = run()
    if text:
        print(text, file=sys.stderr if status == 2 else sys.stdout)
    sys.exit(status)

if __name__ == '__main__':
    main()
