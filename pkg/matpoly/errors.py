"""
Exception hierarchy shared by every polybound package.
Library code raises these; only app.py turns them into exit codes.
"""


class PolyboundError(Exception):
    """Base class for all polybound errors"""


class InvalidPolynomial(PolyboundError):
    """Coefficient array has the wrong shape or non-finite entries"""


class DimensionMismatch(PolyboundError):
    """Two polynomials with different block sizes were combined"""


class SingularLeading(PolyboundError):
    """Leading coefficient is (numerically) singular: infinite eigenvalues, no upper bound"""


class NotMonic(PolyboundError):
    """Operation needs a leading coefficient equal to the identity"""


class Monomial(PolyboundError):
    """All non-leading coefficients are zero"""


class NotDivisor(PolyboundError):
    """Requested k does not divide the degree"""


class ShapeMismatch(PolyboundError):
    """Block lists passed to a determinant oracle do not fit together"""


class InvalidCoefficients(PolyboundError):
    """Scalar bound polynomial has a non-positive leading or a negative lower coefficient"""


class FormatError(PolyboundError):
    """JSON document does not follow the polynomial format"""


class BenchConfigError(PolyboundError):
    """Benchmark description is inconsistent"""
