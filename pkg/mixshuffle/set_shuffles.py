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

"""Mixable shuffles of vectors of finite sets.

This is the generic model of the tensor shuffle product: a merge is a
union of sets.  It is built on the shuffle enumerations directly and
shares no code path with the products.

"""

from .shuffles import enumerate_mixable_pair, enumerate_mixable_triple
from .errors import MixShuffleError, DimensionMismatchError, OverlapError, \
    OracleMismatchError

class SetVector:
    """A nonempty vector (F_1, ..., F_m) of finite nonempty sets of
    atoms.  Atoms are strings; each entry is kept as a sorted tuple so
    that vectors compare and hash canonically.

    """
    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = tuple(tuple(sorted(set(entry))) for entry in entries)
        if not entries:
            raise MixShuffleError('A set vector must be nonempty.')
        if not all(entries):
            raise MixShuffleError('Set vector entries must be nonempty.')
        self.entries = entries

    @classmethod
    def singletons(cls, atoms):
        return cls([[atom] for atom in atoms])

    def atoms(self):
        return set(atom for entry in self.entries for atom in entry)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, SetVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __lt__(self, other):
        return self.entries < other.entries

    def __repr__(self):
        return '(%s)' % ', '.join('{%s}' % ','.join(e) for e in self.entries)

def _require_disjoint(*vectors):
    seen = set()
    for vector in vectors:
        atoms = vector.atoms()
        if seen & atoms:
            raise OverlapError('Operand vectors share atoms %s.' % sorted(
                seen & atoms))
        seen |= atoms

def apply_mixable(F, G, shuffle):
    """The mixable shuffle sigma((F,G);T): position k holds the entry
    sigma(k) of the concatenation (F,G), and each merged pair is
    replaced by the union of its two entries.

    """
    if (len(F), len(G)) != (shuffle.m, shuffle.n):
        raise DimensionMismatchError('Cannot apply an (%d,%d)-shuffle to '
                                     'vectors of lengths %d and %d.' % (
            shuffle.m, shuffle.n, len(F), len(G)))
    H = F.entries + G.entries
    starts = dict(shuffle.merges)
    result, k = [], 1
    while k <= len(H):
        entry = H[shuffle.sigma[k - 1] - 1]
        if k in starts:
            entry = entry + H[shuffle.sigma[k] - 1]
            k += 1
        result.append(entry)
        k += 1
    return SetVector(result)

def apply_mixable_triple(F, G, H, shuffle):
    """Apply a mixable (m,n,l)-shuffle, merging each window by union."""
    if (len(F), len(G), len(H)) != (shuffle.shuffle.m, shuffle.shuffle.n,
                                    shuffle.shuffle.l):
        raise DimensionMismatchError('Vector lengths do not match %r.' % shuffle)
    entries = F.entries + G.entries + H.entries
    widths = dict((w.positions[0], len(w.positions)) for w in shuffle.merges)
    result, k = [], 1
    while k <= len(entries):
        width = widths.get(k, 1)
        merged = ()
        for position in range(k, k + width):
            merged += entries[shuffle.sigma[position - 1] - 1]
        result.append(merged)
        k += width
    return SetVector(result)

def mixable_shuffle_set(F, G):
    """The set of all mixable shuffles of F and G."""
    _require_disjoint(F, G)
    return frozenset(apply_mixable(F, G, shuffle)
                     for shuffle in enumerate_mixable_pair(len(F), len(G)))

def triple_shuffle_sets(F, G, H):
    """Compute the mixable shuffles of F, G and H three ways: directly
    from the (m,n,l) enumeration, as S(S(F,G),H) and as S(F,S(G,H)).

    """
    _require_disjoint(F, G, H)
    direct = frozenset(apply_mixable_triple(F, G, H, shuffle)
                       for shuffle in enumerate_mixable_triple(
                           len(F), len(G), len(H)))
    left = frozenset(V for U in mixable_shuffle_set(F, G)
                     for V in mixable_shuffle_set(U, H))
    right = frozenset(V for U in mixable_shuffle_set(G, H)
                      for V in mixable_shuffle_set(F, U))
    return direct, left, right

def mixable_shuffle_set_triple(F, G, H):
    """The set of mixable shuffles of three vectors.  Raises
    OracleMismatchError unless all three computations coincide.

    """
    direct, left, right = triple_shuffle_sets(F, G, H)
    if not direct == left == right:
        raise OracleMismatchError(
            'Triple shuffle sets differ: %d direct, %d left, %d right.' % (
                len(direct), len(left), len(right)))
    return direct

def nested_union_is_disjoint(F, G, H):
    """True when distinct U in S(F,G) give disjoint sets S(U,H)."""
    seen = set()
    for U in mixable_shuffle_set(F, G):
        block = mixable_shuffle_set(U, H)
        if seen & block:
            return False
        seen |= block
    return True
