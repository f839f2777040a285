# Configuration package

from .polybound_config import (PolyboundConfig, polybound_config, get_worker_count,
                               configure_logging, full_scale_default)

__all__ = ['PolyboundConfig', 'polybound_config', 'get_worker_count', 'configure_logging',
           'full_scale_default']
