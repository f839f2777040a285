"""
JSON polynomial format:
{"m": int, "degree": int, "coefficients": [C0, ..., Cn]} with each Cj an m x m row-major
array of [re, im] pairs. Coefficients ascend in degree.
"""

import json
import logging

import numpy as np

from .errors import FormatError, InvalidPolynomial
from .matrix_poly import MatrixPoly

logger = logging.getLogger(__name__)


def matrix_to_pairs(A):
    return [[[float(x.real), float(x.imag)] for x in row] for row in np.asarray(A)]


def poly_to_dict(P):
    return {
        'm': P.m,
        'degree': P.degree,
        'coefficients': [matrix_to_pairs(A) for A in P.coeffs],
    }


def _parse_matrix(raw, m, j):
    if not isinstance(raw, list) or len(raw) != m:
        raise FormatError(f"coefficient {j}: expected {m} rows")
    rows = []
    for r, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != m:
            raise FormatError(f"coefficient {j}, row {r}: expected {m} entries")
        entries = []
        for pair in row:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise FormatError(f"coefficient {j}, row {r}: entries must be [re, im] pairs")
            try:
                entries.append(complex(float(pair[0]), float(pair[1])))
            except (TypeError, ValueError):
                raise FormatError(f"coefficient {j}, row {r}: non-numeric entry {pair!r}")
        rows.append(entries)
    return rows


def poly_from_dict(data):
    """Parse the JSON polynomial format; a 'metadata' object is accepted and ignored"""
    if not isinstance(data, dict):
        raise FormatError("polynomial document must be a JSON object")
    try:
        m = int(data['m'])
        degree = int(data['degree'])
        raw = data['coefficients']
    except KeyError as e:
        raise FormatError(f"missing field {e}")
    except (TypeError, ValueError):
        raise FormatError("'m' and 'degree' must be integers")
    if m < 1 or degree < 0:
        raise FormatError(f"invalid sizes m={m}, degree={degree}")
    if not isinstance(raw, list) or len(raw) != degree + 1:
        raise FormatError(f"expected {degree + 1} coefficients, got {len(raw) if isinstance(raw, list) else 'none'}")
    if 'metadata' in data:
        logger.debug(f"ignoring metadata {data['metadata']}")
    try:
        return MatrixPoly([_parse_matrix(C, m, j) for j, C in enumerate(raw)])
    except InvalidPolynomial as e:
        raise FormatError(str(e))


def dumps_poly(P, metadata=None, indent=None):
    data = poly_to_dict(P)
    if metadata is not None:
        data['metadata'] = metadata
    return json.dumps(data, indent=indent)


def loads_poly(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}")
    return poly_from_dict(data)


def load_poly(path):
    with open(path, 'r') as f:
        return loads_poly(f.read())


def save_poly(P, path, metadata=None):
    with open(path, 'w') as f:
        f.write(dumps_poly(P, metadata=metadata, indent=2))
