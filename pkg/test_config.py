import logging
import os

import pytest

from config import PolyboundConfig


def test_defaults():
    cfg = PolyboundConfig(environ={})
    assert cfg.threads == 0
    assert cfg.worker_count() == (os.cpu_count() or 1)
    assert cfg.log_level == 'WARNING'
    assert cfg.full_scale is False


def test_explicit_values():
    cfg = PolyboundConfig(environ={'POLYBOUND_THREADS': '3', 'POLYBOUND_LOG_LEVEL': 'debug',
                                   'POLYBOUND_FULL_SCALE': 'true'})
    assert cfg.worker_count() == 3
    assert cfg.log_level == 'DEBUG'
    assert cfg.full_scale is True


@pytest.mark.parametrize('value', ['many', '2.5'])
def test_invalid_thread_count_falls_back(value, caplog):
    with caplog.at_level(logging.WARNING):
        cfg = PolyboundConfig(environ={'POLYBOUND_THREADS': value})
    assert cfg.threads == 0
    assert 'POLYBOUND_THREADS' in caplog.text


def test_configure_logging_level():
    cfg = PolyboundConfig(environ={'POLYBOUND_LOG_LEVEL': 'INFO'})
    assert cfg.configure_logging() == logging.INFO
    assert cfg.configure_logging('error') == logging.ERROR
    assert logging.getLogger().level == logging.ERROR
    assert cfg.configure_logging('nonsense') == logging.WARNING
