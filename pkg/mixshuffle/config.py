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

from configparser import ConfigParser
from .coefficients import Weight, parse_ring
from .monomials import Monoid
from .errors import MixShuffleError
import os

CONFIG_FILE = os.path.join('~', '.mixshuffle.conf')
SECTION = 'mixshuffle'
DEFAULTS = {'ring': 'int', 'lambda': '1', 'format': 'text', 'seed': '0',
            'alphabet': ''}
FORMATS = ('text', 'json')

class Config(ConfigParser):
    """The defaults for the mixshuffle command.

    Reads the [mixshuffle] section of the file named by the environment
    variable MIXSHUFFLE_CONFIG, or of ~/.mixshuffle.conf.  A missing
    file leaves the built-in defaults in place.  The environment
    variable MIXSHUFFLE_FORMAT overrides the output format given in the
    file, and command line options override both.

    """
    def __init__(self, config_file=None, environ=None):
        ConfigParser.__init__(self)
        environ = os.environ if environ is None else environ
        if config_file is None:
            config_file = environ.get('MIXSHUFFLE_CONFIG', CONFIG_FILE)
        self.config_file = os.path.expanduser(config_file)
        self.read_dict({SECTION: DEFAULTS})
        self.read(self.config_file)
        if environ.get('MIXSHUFFLE_FORMAT'):
            self.set(SECTION, 'format', environ['MIXSHUFFLE_FORMAT'])

    def ring(self):
        return parse_ring(self.get(SECTION, 'ring'))

    def weight(self, ring):
        return Weight(ring.parse(self.get(SECTION, 'lambda')))

    def format(self):
        value = self.get(SECTION, 'format').strip().lower()
        if value not in FORMATS:
            raise MixShuffleError('Unknown output format %r; use text or json.' % value)
        return value

    def seed(self):
        try:
            return self.getint(SECTION, 'seed')
        except ValueError:
            raise MixShuffleError('The seed must be an integer.')

    def alphabet(self):
        return Monoid(self.get(SECTION, 'alphabet'))
