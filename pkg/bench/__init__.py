# Benchmark package
# Random polynomial classes, the experiment runner and table output

from .classes import (BenchConfig, CLASS_PRESETS, SCALED_PRESETS, ENTRY_BOUND, divisors,
                      config_for_class, generate_sample)
from .runner import (BenchTable, SampleResult, run_sample, run_experiment, column_violations,
                     row_trend_flags)
from .tables import CSV_COLUMNS, emit_table

__all__ = ['BenchConfig', 'CLASS_PRESETS', 'SCALED_PRESETS', 'ENTRY_BOUND', 'divisors',
           'config_for_class', 'generate_sample', 'BenchTable', 'SampleResult', 'run_sample',
           'run_experiment', 'column_violations', 'row_trend_flags', 'CSV_COLUMNS', 'emit_table']
