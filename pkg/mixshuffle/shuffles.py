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

"""Permutation shuffles and mixable shuffles.

Permutations are given in one-line form with 1-based images, so that
sigma[k-1] is sigma(k).  An (m,n)-shuffle preserves the relative order
of the values 1..m and of the values m+1..m+n.  A pair of positions
(k, k+1) is admissible when sigma(k) <= m < sigma(k+1), and a mixable
shuffle is a shuffle together with a set of admissible pairs at which
the two adjacent entries are merged.

Enumerations are sorted lexicographically by one-line form, then by the
number of merges, then by the merge positions.

"""

import logging
from functools import lru_cache
from itertools import combinations
from .coefficients import INTEGERS, binomial
from .errors import MixShuffleError, DimensionMismatchError, OracleMismatchError

logger = logging.getLogger('mixshuffle')

# Merge classes for (m,n,l)-shuffles, keyed by the blocks of the merged
# entries: block 0 holds 1..m, block 1 holds m+1..m+n, block 2 the rest.
T110, T101, T011, T111 = (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)
merge_classes = {(0, 1): T110, (0, 2): T101, (1, 2): T011, (0, 1, 2): T111}

def _check_blocks(sigma, sizes):
    if sorted(sigma) != list(range(1, sum(sizes) + 1)):
        raise MixShuffleError('%s is not a permutation of 1..%d.' % (
            list(sigma), sum(sizes)))
    start = 0
    for size in sizes:
        values = [v for v in sigma if start < v <= start + size]
        if values != sorted(values):
            raise MixShuffleError('%s does not preserve the order of %d..%d.' % (
                list(sigma), start + 1, start + size))
        start += size

def apply_slots(values, slots, merge):
    """Apply a mixable shuffle, given by its slots, to a sequence of
    values.  Merged entries are combined with the binary function merge.

    """
    result = []
    for slot in slots:
        value = values[slot[0] - 1]
        for index in slot[1:]:
            value = merge(value, values[index - 1])
        result.append(value)
    return result

class PairShuffle:
    """An (m,n)-shuffle."""
    __slots__ = ('m', 'n', 'sigma')

    def __init__(self, m, n, sigma):
        sigma = tuple(sigma)
        if len(sigma) != m + n:
            raise DimensionMismatchError(
                'An (%d,%d)-shuffle has %d entries, not %d.' % (
                    m, n, m + n, len(sigma)))
        _check_blocks(sigma, (m, n))
        self.m, self.n, self.sigma = m, n, sigma

    def __call__(self, k):
        return self.sigma[k - 1]

    def __eq__(self, other):
        return (isinstance(other, PairShuffle) and
                (self.m, self.n, self.sigma) == (other.m, other.n, other.sigma))

    def __hash__(self):
        return hash((self.m, self.n, self.sigma))

    def __repr__(self):
        return 'PairShuffle(%d,%d,%s)' % (self.m, self.n, list(self.sigma))

class MixablePairShuffle:
    """A mixable (m,n)-shuffle (sigma, T).  The merges are stored as a
    sorted tuple of admissible pairs (k, k+1).

    """
    __slots__ = ('shuffle', 'merges', 'slots')

    def __init__(self, shuffle, merges=()):
        merges = tuple(sorted(tuple(pair) for pair in merges))
        admissible = admissible_pairs(shuffle)
        for pair in merges:
            if pair not in admissible:
                raise MixShuffleError('%s is not admissible for %s.' % (
                    pair, shuffle))
        self.shuffle, self.merges = shuffle, merges
        starts = set(k for k, _ in merges)
        sigma, slots, k = shuffle.sigma, [], 0
        while k < len(sigma):
            if k + 1 in starts:
                slots.append((sigma[k], sigma[k + 1]))
                k += 2
            else:
                slots.append((sigma[k],))
                k += 1
        self.slots = tuple(slots)

    @property
    def m(self):
        return self.shuffle.m

    @property
    def n(self):
        return self.shuffle.n

    @property
    def sigma(self):
        return self.shuffle.sigma

    @property
    def degree(self):
        return len(self.merges)

    def __len__(self):
        """The length m + n - |T| of the result."""
        return len(self.slots)

    def __eq__(self, other):
        return (isinstance(other, MixablePairShuffle) and
                self.shuffle == other.shuffle and self.merges == other.merges)

    def __hash__(self):
        return hash((self.shuffle, self.merges))

    def __repr__(self):
        return 'MixablePairShuffle(%d,%d,%s,T=%s)' % (
            self.m, self.n, list(self.sigma), list(self.merges))

@lru_cache(maxsize=None)
def enumerate_pair_shuffles(m, n):
    """Return the (m,n)-shuffles, sorted by one-line form."""
    if m < 0 or n < 0:
        raise MixShuffleError('Block sizes must be natural numbers.')
    size, result = m + n, []
    for positions in combinations(range(size), m):
        chosen, images = set(positions), []
        first, second = iter(range(1, m + 1)), iter(range(m + 1, size + 1))
        for p in range(size):
            images.append(next(first) if p in chosen else next(second))
        result.append(PairShuffle(m, n, images))
    result.sort(key=lambda s: s.sigma)
    return tuple(result)

def admissible_pairs(shuffle):
    """Return the admissible pairs (k, k+1) of an (m,n)-shuffle."""
    sigma, m = shuffle.sigma, shuffle.m
    return tuple((k, k + 1) for k in range(1, len(sigma))
                 if sigma[k - 1] <= m < sigma[k])

@lru_cache(maxsize=None)
def enumerate_mixable_pair(m, n):
    """Return all mixable (m,n)-shuffles in canonical order."""
    result = []
    for shuffle in enumerate_pair_shuffles(m, n):
        pairs = admissible_pairs(shuffle)
        for size in range(len(pairs) + 1):
            for merges in combinations(pairs, size):
                result.append(MixablePairShuffle(shuffle, merges))
    logger.debug('Enumerated %d mixable (%d,%d)-shuffles.', len(result), m, n)
    return tuple(result)

def count_mixable_pair_by_merges(m, n, i, ring=INTEGERS):
    """The number of mixable (m,n)-shuffles with exactly i merges."""
    return binomial(m + n - i, n, ring) * binomial(n, i, ring)

def count_mixable_pair(m, n, ring=INTEGERS):
    """s(m,n), the number of mixable (m,n)-shuffles."""
    total = ring.zero
    for i in range(n + 1):
        total += count_mixable_pair_by_merges(m, n, i, ring)
    return total

def partition_dec(m, n):
    """Split the mixable (m,n)-shuffles into the classes whose first
    entry comes from the first block unmerged, from the second block
    unmerged, or is the merge (1,2).

    """
    if m < 1 or n < 1:
        raise MixShuffleError('The decomposition needs m, n >= 1.')
    first, second, merged = [], [], []
    for shuffle in enumerate_mixable_pair(m, n):
        if (1, 2) in shuffle.merges:
            merged.append(shuffle)
        elif shuffle.sigma[0] == 1:
            first.append(shuffle)
        elif shuffle.sigma[0] == m + 1:
            second.append(shuffle)
        else:
            raise OracleMismatchError('%r fits no class.' % shuffle)
    return first, second, merged

class TripleShuffle:
    """An (m,n,l)-shuffle."""
    __slots__ = ('m', 'n', 'l', 'sigma')

    def __init__(self, m, n, l, sigma):
        sigma = tuple(sigma)
        if len(sigma) != m + n + l:
            raise DimensionMismatchError(
                'An (%d,%d,%d)-shuffle has %d entries, not %d.' % (
                    m, n, l, m + n + l, len(sigma)))
        _check_blocks(sigma, (m, n, l))
        self.m, self.n, self.l, self.sigma = m, n, l, sigma

    def block(self, value):
        if value <= self.m:
            return 0
        if value <= self.m + self.n:
            return 1
        return 2

    def __eq__(self, other):
        return (isinstance(other, TripleShuffle) and
                (self.m, self.n, self.l, self.sigma) ==
                (other.m, other.n, other.l, other.sigma))

    def __hash__(self):
        return hash((self.m, self.n, self.l, self.sigma))

    def __repr__(self):
        return 'TripleShuffle(%d,%d,%d,%s)' % (
            self.m, self.n, self.l, list(self.sigma))

class MergeWindow:
    """A merge entry of a mixable (m,n,l)-shuffle: a pair (k,k+1) of
    class T110, T101 or T011, or a triple (k,k+1,k+2) of class T111.

    """
    __slots__ = ('klass', 'positions')

    def __init__(self, klass, positions):
        self.klass, self.positions = klass, tuple(positions)

    @property
    def degree(self):
        return len(self.positions) - 1

    def __eq__(self, other):
        return (isinstance(other, MergeWindow) and self.klass == other.klass
                and self.positions == other.positions)

    def __hash__(self):
        return hash((self.klass, self.positions))

    def __repr__(self):
        return 'T%s%s' % (''.join(map(str, self.klass)), self.positions)

def window_class(shuffle, positions):
    """Return the merge class of a window of consecutive positions, or
    None if the window is not admissible.  Each merged entry must come
    from a different block, in increasing block order.

    """
    if positions[-1] > len(shuffle.sigma) or positions[0] < 1:
        return None
    blocks = tuple(shuffle.block(shuffle.sigma[k - 1]) for k in positions)
    return merge_classes.get(blocks)

class MixableTripleShuffle:
    """A mixable (m,n,l)-shuffle with non-overlapping merge windows.
    The degree counts pair windows once and triple windows twice.

    """
    __slots__ = ('shuffle', 'merges', 'degree', 'slots')

    def __init__(self, shuffle, merges=()):
        merges = tuple(sorted(merges, key=lambda w: w.positions))
        used = set()
        for window in merges:
            if window_class(shuffle, window.positions) != window.klass:
                raise MixShuffleError('%r is not a valid merge for %r.' % (
                    window, shuffle))
            if used.intersection(window.positions):
                raise MixShuffleError('Overlapping merges in %r.' % (merges,))
            used.update(window.positions)
        self.shuffle, self.merges = shuffle, merges
        self.degree = sum(window.degree for window in merges)
        starts = dict((w.positions[0], len(w.positions)) for w in merges)
        sigma, slots, k = shuffle.sigma, [], 1
        while k <= len(sigma):
            width = starts.get(k, 1)
            slots.append(sigma[k - 1:k - 1 + width])
            k += width
        self.slots = tuple(slots)

    @property
    def sigma(self):
        return self.shuffle.sigma

    def __len__(self):
        return len(self.slots)

    def __eq__(self, other):
        return (isinstance(other, MixableTripleShuffle) and
                self.shuffle == other.shuffle and self.merges == other.merges)

    def __hash__(self):
        return hash((self.shuffle, self.merges))

    def __repr__(self):
        return 'MixableTripleShuffle(%s,T=%s,deg=%d)' % (
            list(self.sigma), list(self.merges), self.degree)

@lru_cache(maxsize=None)
def enumerate_triple_shuffles(m, n, l):
    """Return the (m,n,l)-shuffles, sorted by one-line form."""
    result = []
    for outer in enumerate_pair_shuffles(m + n, l):
        for inner in enumerate_pair_shuffles(m, n):
            # Relabel the first m+n values of outer by inner's order.
            sigma = [inner.sigma[v - 1] if v <= m + n else v
                     for v in outer.sigma]
            result.append(TripleShuffle(m, n, l, sigma))
    result.sort(key=lambda s: s.sigma)
    return tuple(result)

def candidate_windows(shuffle):
    """All admissible merge windows of an (m,n,l)-shuffle."""
    result = []
    for k in range(1, len(shuffle.sigma) + 1):
        for width in (2, 3):
            positions = tuple(range(k, k + width))
            klass = window_class(shuffle, positions)
            if klass is not None:
                result.append(MergeWindow(klass, positions))
    return result

def _independent_sets(windows, start=0, taken=frozenset()):
    yield ()
    for i in range(start, len(windows)):
        window = windows[i]
        if taken.isdisjoint(window.positions):
            for rest in _independent_sets(windows, i + 1,
                                          taken.union(window.positions)):
                yield (window,) + rest

def _triple_order(item):
    return (item.sigma, len(item.merges),
            [w.positions for w in item.merges])

@lru_cache(maxsize=None)
def enumerate_mixable_triple(m, n, l):
    """Return all mixable (m,n,l)-shuffles in canonical order."""
    result = []
    for shuffle in enumerate_triple_shuffles(m, n, l):
        for merges in _independent_sets(candidate_windows(shuffle)):
            result.append(MixableTripleShuffle(shuffle, merges))
    result.sort(key=_triple_order)
    logger.debug('Enumerated %d mixable (%d,%d,%d)-shuffles.',
                 len(result), m, n, l)
    return tuple(result)

def count_mixable_triple_by_degree(m, n, l, k, ring=INTEGERS):
    """The number of mixable (m,n,l)-shuffles of degree k."""
    total = ring.zero
    for i in range(n + 1):
        total += (binomial(m + n + l - k, l, ring) * binomial(l, k - i, ring) *
                  binomial(m + n - i, n, ring) * binomial(n, i, ring))
    return total

def count_mixable_triple(m, n, l, ring=INTEGERS):
    """s(m,n,l), the number of mixable (m,n,l)-shuffles."""
    total = ring.zero
    for k in range(n + l + 1):
        total += count_mixable_triple_by_degree(m, n, l, k, ring)
    return total

def triple_from_slots(m, n, l, slots):
    """Build the mixable (m,n,l)-shuffle whose result has the given
    slots, each slot being a sorted tuple of merged values.

    """
    sigma, merges, position = [], [], 1
    shuffle_blocks = TripleShuffle(m, n, l, range(1, m + n + l + 1))
    for slot in slots:
        sigma.extend(slot)
        if len(slot) > 1:
            blocks = tuple(shuffle_blocks.block(v) for v in slot)
            klass = merge_classes.get(blocks)
            if klass is None:
                raise MixShuffleError('%s is not a mergeable slot.' % (slot,))
            merges.append(MergeWindow(klass, range(position, position + len(slot))))
        position += len(slot)
    return MixableTripleShuffle(TripleShuffle(m, n, l, sigma), merges)

def compose_mixable_triple(m, n, l):
    """Build the mixable (m,n,l)-shuffles by applying a mixable shuffle
    of (U, block 3) to each result U of a mixable shuffle of blocks 1
    and 2.  The degrees must add, and no result may repeat.

    """
    result, seen = [], set()
    for first in enumerate_mixable_pair(m, n):
        for second in enumerate_mixable_pair(len(first), l):
            values = list(first.slots) + [(v,) for v in
                                          range(m + n + 1, m + n + l + 1)]
            slots = [tuple(sorted(s)) for s in
                     apply_slots(values, second.slots, lambda a, b: a + b)]
            triple = triple_from_slots(m, n, l, slots)
            if triple.degree != first.degree + second.degree:
                raise OracleMismatchError('Degree of %r is not %d + %d.' % (
                    triple, first.degree, second.degree))
            if triple in seen:
                raise OracleMismatchError('%r arises twice.' % triple)
            seen.add(triple)
            result.append(triple)
    result.sort(key=_triple_order)
    return result
