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

import os, sys
import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

settings.register_profile('mixshuffle', deadline=None, derandomize=True,
                          max_examples=100)
settings.load_profile('mixshuffle')

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')

@pytest.fixture
def environ(tmp_path):
    """An environment pointing the CLI at a config file which does not exist."""
    return {'MIXSHUFFLE_CONFIG': str(tmp_path / 'missing.conf')}

@pytest.fixture
def golden():
    def read(name):
        with open(os.path.join(GOLDEN, name), encoding='utf-8', newline='') as f:
            return f.read()
    return read
