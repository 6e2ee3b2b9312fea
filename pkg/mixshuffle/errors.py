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

class MixShuffleError(ValueError):
    """Base class for every error raised by the library."""

class RingMismatchError(MixShuffleError):
    pass

class MonoidMismatchError(MixShuffleError):
    pass

class DimensionMismatchError(MixShuffleError):
    pass

class WeightMismatchError(MixShuffleError):
    pass

class UnsupportedWeightError(MixShuffleError):
    pass

class OverlapError(MixShuffleError):
    pass

class InvalidSymbolError(MixShuffleError):
    pass

class UnknownGeneratorError(MixShuffleError):
    pass

class MalformedCoefficientError(MixShuffleError):
    pass

class OracleMismatchError(MixShuffleError):
    """Two computations which must agree did not."""

class ExpressionSyntaxError(MixShuffleError):
    """A parse failure.  The position is a 1-based column and expected
    is a sorted list of the terminals which would have been accepted.

    """
    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = sorted(set(expected))
        if position is not None:
            message = '%s at column %d' % (message, position)
        if self.expected:
            message += ' (expected one of: %s)' % ', '.join(self.expected)
        MixShuffleError.__init__(self, message)
