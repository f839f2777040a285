#!/usr/bin/env python3
"""
Runtime Configuration and Logging Set-up
For the matrix polynomial bound tools
"""

import logging
import os

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class PolyboundConfig:
    """Settings read from POLYBOUND_* environment variables"""

    def __init__(self, environ=None):
        env = os.environ if environ is None else environ

        threads = env.get('POLYBOUND_THREADS', '0')
        try:
            self.threads = max(0, int(threads))
        except ValueError:
            logger.warning(f"POLYBOUND_THREADS={threads!r} is not an integer, using automatic worker count")
            self.threads = 0

        self.log_level = env.get('POLYBOUND_LOG_LEVEL', 'WARNING').upper()
        self.full_scale = env.get('POLYBOUND_FULL_SCALE', 'false').strip().lower() in ('1', 'true', 'yes')
        self._logging_ready = False

    def worker_count(self):
        """Thread pool size; 0 means one worker per CPU"""
        if self.threads:
            return self.threads
        return os.cpu_count() or 1

    def configure_logging(self, level=None):
        """Initialise the root logger once; an explicit level always wins"""
        chosen = (level or self.log_level).upper()
        numeric = logging.getLevelName(chosen)
        if not isinstance(numeric, int):
            logger.warning(f"unknown log level {chosen!r}, using WARNING")
            numeric = logging.WARNING
        if not self._logging_ready:
            logging.basicConfig(level=numeric, format=LOG_FORMAT)
            self._logging_ready = True
        logging.getLogger().setLevel(numeric)
        return numeric


# Global configuration instance
polybound_config = PolyboundConfig()


# Convenience functions
def get_worker_count():
    """Worker threads for the benchmark runner"""
    return polybound_config.worker_count()


def configure_logging(level=None):
    """Set up logging from POLYBOUND_LOG_LEVEL or the given level name"""
    return polybound_config.configure_logging(level)


def full_scale_default():
    """Whether benchmarks use full class dimensions without --full"""
    return polybound_config.full_scale
