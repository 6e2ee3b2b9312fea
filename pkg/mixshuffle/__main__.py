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

from .cli import main

if __name__ == "__main__":
    main()
