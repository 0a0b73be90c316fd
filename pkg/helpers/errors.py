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


class WydError(Exception):
    """
    Base class for every error raised by this tool
    Each subclass carries the exit code used by the command line
    """
    exit_code = 3


### Invalid input (exit code 2)

class InvalidInput(WydError):
    exit_code = 2


class NotSquare(InvalidInput):
    def __init__(self, shape):
        super().__init__("Matrix is not square (shape {})".format(shape))
        self.shape = shape


class NotHermitian(InvalidInput):
    def __init__(self, deviation, tolerance):
        super().__init__("Matrix is not Hermitian: max |M - M^H| = {:.3e} > {:.3e}".format(
            deviation,
            tolerance
        ))
        self.deviation = deviation


class NotPSD(InvalidInput):
    def __init__(self, min_eigenvalue, tolerance):
        super().__init__("Matrix is not positive semidefinite: min eigenvalue {:.3e} < -{:.3e}".format(
            min_eigenvalue,
            tolerance
        ))
        self.min_eigenvalue = min_eigenvalue


class TraceNotOne(InvalidInput):
    def __init__(self, deviation, tolerance):
        super().__init__("Trace differs from 1 by {:.3e} (tolerance {:.3e})".format(
            deviation,
            tolerance
        ))
        self.deviation = deviation


class NotUnitary(InvalidInput):
    def __init__(self, deviation):
        super().__init__("Basis is not unitary: max |U^H U - I| = {:.3e}".format(deviation))
        self.deviation = deviation


class DimensionMismatch(InvalidInput):
    def __init__(self, dimensions):
        super().__init__("Dimensions do not match: {}".format(dimensions))
        self.dimensions = dimensions


class DimensionTooLarge(InvalidInput):
    pass


class EmptyList(InvalidInput):
    pass


class NegativeExponent(InvalidInput):
    def __init__(self, exponent):
        super().__init__("Matrix power exponent must be >= 0, got {}".format(exponent))
        self.exponent = exponent


class InvalidAlpha(InvalidInput):
    def __init__(self, value):
        super().__init__("alpha must lie in the open interval (0, 1), got {}".format(value))
        self.value = value


class OutOfRange(InvalidInput):
    pass


class NotFinite(InvalidInput):
    def __init__(self, what):
        super().__init__("{} contains NaN or infinite values".format(what))
        self.what = what


class ParseError(InvalidInput):
    pass


### Numerical failures (exit code 3)

class NumericalFailure(WydError):
    exit_code = 3


class ConvergenceFailure(NumericalFailure):
    """
    iterations is only known for iterative solvers, LAPACK does not report it
    """
    def __init__(self, dimension, iterations=None, residual=None, reason=None):
        message = "Eigensolver failed on a {0}x{0} matrix".format(dimension)
        if iterations is not None:
            message += " after {} iteration(s)".format(iterations)
        if residual is not None:
            message += " (residual {:.3e})".format(residual)
        if reason:
            message += ": {}".format(reason)
        super().__init__(message)
        self.dimension = dimension
        self.iterations = iterations
        self.residual = residual


class NonImaginaryResult(NumericalFailure):
    def __init__(self, value):
        super().__init__("Tr(rho [A, B]) has a real part of {:.3e}, operators are probably not Hermitian".format(
            value.real
        ))
        self.value = value


class GoldenMismatch(WydError):
    exit_code = 3

    def __init__(self, field, expected, got, report=None):
        super().__init__("Golden value mismatch for {}: expected {}, got {}".format(
            field,
            expected,
            got
        ))
        self.field = field
        self.expected = expected
        self.got = got
        self.report = report
