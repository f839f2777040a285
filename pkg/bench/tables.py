"""
Text output for benchmark tables: CSV, markdown and JSON.
"""

import csv
import io
import json

CSV_COLUMNS = ['class', 'n', 'm', 'samples', 'seed', 'norm', 'q', 'step', 'side', 'mean_ratio',
               'mean_cost', 'eq_degree', 'excluded_samples']


def _csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for c, q in enumerate(table.qs):
        for t in range(table.rows):
            side = table.sides[t - 1] if t else 'none'
            writer.writerow([table.class_label, table.n, table.m, table.samples, table.seed, table.norm,
                             q, t, side, repr(table.mean_ratio[t][c]), repr(table.mean_cost[t][c]),
                             table.degrees[t][c], table.excluded])
    return buffer.getvalue()


def _markdown(table):
    lines = [f"Mean ratio of Cauchy radius to largest eigenvalue modulus, class {table.class_label} "
             f"(n={table.n}, m={table.m}, {table.included} samples, {table.norm}-norm)", '']
    if table.qs:
        header = ' | '.join(f"q = {q}" for q in table.qs)
        rule = ' | '.join('---' for _ in table.qs)
        lines += [header, rule]
        for t in range(table.rows):
            lines.append(' | '.join(f"{table.mean_ratio[t][c]:.2f} ({table.degrees[t][c]})"
                                    for c in range(len(table.qs))))

    lines += ['', "Mean cumulative cost, in units of one application to the original polynomial", '']
    if table.qs:
        lines += [header, rule]
        for t in range(table.rows):
            cells = []
            for c in range(len(table.qs)):
                cost = '*' if t == 0 else f"{table.mean_cost[t][c]:.1f}"
                cells.append(f"{cost} ({table.degrees[t][c]})")
            lines.append(' | '.join(cells))
    return '\n'.join(lines) + '\n'


def emit_table(table, fmt='markdown'):
    """Render a BenchTable as 'csv', 'markdown' (or 'md') or 'json'"""
    fmt = fmt.lower()
    if fmt == 'csv':
        return _csv(table)
    if fmt in ('markdown', 'md'):
        return _markdown(table)
    if fmt == 'json':
        return json.dumps(table.to_dict(), indent=2) + '\n'
    raise ValueError(f"unknown table format {fmt!r}")
