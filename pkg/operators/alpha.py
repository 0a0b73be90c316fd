"""
Copyright (C) 2026 The wydcheck authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""
import numbers

from helpers.errors import InvalidAlpha


class Alpha:
    """
    Dyson parameter, restricted to the open interval (0, 1)
    """
    __slots__ = ("_value",)

    def __init__(self, value):
        if isinstance(value, Alpha):
            value = value.value

        if not isinstance(value, numbers.Real) or not 0 < value < 1:
            raise InvalidAlpha(value)

        self._value = float(value)

    @classmethod
    def of(cls, value):
        if isinstance(value, cls):
            return value
        return cls(value)

    @property
    def value(self):
        return self._value

    @property
    def complement(self):
        return 1.0 - self._value

    @property
    def skew_exponent(self):
        """
        |2 alpha - 1|, the exponent used by the modified commutator term
        """
        return abs(2.0 * self._value - 1.0)

    @property
    def is_half(self):
        return self.skew_exponent == 0.0

    def __float__(self):
        return self._value

    def __eq__(self, other):
        if isinstance(other, Alpha):
            return self._value == other._value
        return NotImplemented

    def __hash__(self):
        return hash(self._value)

    def __repr__(self):
        return "Alpha({})".format(self._value)


HALF = Alpha(0.5)
