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

from .coefficients import Ring, Coeff, Weight, INTEGERS, RATIONALS, parse_ring, binomial
from .monomials import Monomial, Monoid, Polynomial, ONE
from .shuffles import (PairShuffle, MixablePairShuffle, TripleShuffle,
                       MixableTripleShuffle, enumerate_pair_shuffles,
                       admissible_pairs, enumerate_mixable_pair,
                       count_mixable_pair, count_mixable_pair_by_merges,
                       partition_dec, enumerate_mixable_triple,
                       count_mixable_triple, compose_mixable_triple)
from .set_shuffles import (SetVector, apply_mixable, mixable_shuffle_set,
                           mixable_shuffle_set_triple)
from .shuffle_algebra import (PlusElement, mixable_product_plus,
                              apply_mixable_to_tensor, mixable_product_plus_graded)
from .baxter import (BaxElement, BaxterAlgebra, FreeBaxterAlgebra,
                     augmented_product, baxter_operator, check_baxter_identity,
                     AlgebraMap, UniversalMap, universal_map,
                     check_product_expansion, check_homomorphism,
                     Substitution, functor_map, generator_span_words)
from .targets import (ZeroOperatorAlgebra, ScalarOperatorAlgebra,
                      TabulatedBaxterAlgebra, partial_sum_algebra)
from .cartier import (CartierSymbol, CartierElement, CartierAlgebra,
                      CartierMorphism, enumerate_cartier_triples,
                      cartier_product, cartier_operator, embed_cartier,
                      factor_through)
from .hurwitz import (HurwitzPolynomial, HurwitzAlgebra, hurwitz_mul,
                      hurwitz_shift, embed_sha_c, one_tensor_product)
from .expressions import parse_expression, render
from .errors import *
