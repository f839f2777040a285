# Eigenvalue oracle package

from .spectrum import (Spectrum, ValidationResult, VALIDATION_SLACK, eigenvalues, validate_bounds,
                       match_spectra, eigenpair_residuals)

__all__ = ['Spectrum', 'ValidationResult', 'VALIDATION_SLACK', 'eigenvalues', 'validate_bounds',
           'match_spectra', 'eigenpair_residuals']
