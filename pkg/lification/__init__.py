# Companion form package
# l-ifications, Frobenius companion matrix and determinant oracles

from .companion import Lification, lify, frobenius_companion
from .det_checks import block_det_identity_check, det_equivalence_check, relative_gap

__all__ = ['Lification', 'lify', 'frobenius_companion', 'block_det_identity_check',
           'det_equivalence_check', 'relative_gap']
