# Matrix polynomial package
# Core types, arithmetic, norms and the JSON format

from .errors import (PolyboundError, InvalidPolynomial, DimensionMismatch, SingularLeading,
                     NotMonic, Monomial, NotDivisor, ShapeMismatch, InvalidCoefficients,
                     FormatError, BenchConfigError)
from .matrix_poly import (MatrixPoly, MonicSide, MAX_LEADING_CONDITION, as_complex_matrix, check_leading,
                          evaluate, reverse, make_monic, mul, gap_index, nnz_stats)
from .norms import NormKind, norm
from .serialization import (poly_to_dict, poly_from_dict, dumps_poly, loads_poly,
                            load_poly, save_poly, matrix_to_pairs)

__all__ = [
    'PolyboundError', 'InvalidPolynomial', 'DimensionMismatch', 'SingularLeading', 'NotMonic',
    'Monomial', 'NotDivisor', 'ShapeMismatch', 'InvalidCoefficients', 'FormatError',
    'BenchConfigError',
    'MatrixPoly', 'MonicSide', 'MAX_LEADING_CONDITION', 'as_complex_matrix', 'check_leading', 'evaluate',
    'reverse', 'make_monic', 'mul', 'gap_index', 'nnz_stats',
    'NormKind', 'norm',
    'poly_to_dict', 'poly_from_dict', 'dumps_poly', 'loads_poly', 'load_poly', 'save_poly',
    'matrix_to_pairs',
]
