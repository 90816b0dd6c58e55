"""Interval arithmetic used as an independent oracle for the price corpora.

Everything here reasons about real intervals with exact rationals and never
touches the translation machinery, so agreement is meaningful.
"""

from fractions import Fraction

YUAN_PER_DOLLAR = Fraction(100, 15)

DOLLAR_CELLS = [(Fraction(10 * i), Fraction(10 * i + 10)) for i in range(12)]
YUAN_CELLS = [(Fraction(100 * i), Fraction(100 * i + 100)) for i in range(8)]


def dollar_name(cell):
    return f"usd_{int(cell[0])}_{int(cell[1])}"


def yuan_name(cell):
    return f"cny_{int(cell[0])}_{int(cell[1])}"


def dollars_to_yuan(cell):
    return (cell[0] * YUAN_PER_DOLLAR, cell[1] * YUAN_PER_DOLLAR)


def yuan_to_dollars(cell):
    return (cell[0] / YUAN_PER_DOLLAR, cell[1] / YUAN_PER_DOLLAR)


def overlapping(interval, cells):
    lo, hi = interval
    return [c for c in cells if c[1] > lo and c[0] < hi]


def contained(interval, cells):
    lo, hi = interval
    return [c for c in cells if c[0] >= lo and c[1] <= hi]


def covering_dollar_names(yuan_cells_chosen):
    """Smallest union of dollar cells containing the chosen yuan cells."""
    names = set()
    for cell in yuan_cells_chosen:
        for c in overlapping(yuan_to_dollars(cell), DOLLAR_CELLS):
            names.add(dollar_name(c))
    return names


def covering_yuan_names(dollar_cells_chosen):
    names = set()
    for cell in dollar_cells_chosen:
        for c in overlapping(dollars_to_yuan(cell), YUAN_CELLS):
            names.add(yuan_name(c))
    return names


def inner_dollar_names(yuan_cells_chosen):
    """Union of dollar cells inside the union of the chosen yuan cells.

    Works cell-by-cell on maximal runs so non-adjacent yuan selections are
    handled correctly.
    """
    runs = _merge_runs(sorted(yuan_cells_chosen))
    names = set()
    for run in runs:
        for c in contained(yuan_to_dollars(run), DOLLAR_CELLS):
            names.add(dollar_name(c))
    return names


def _merge_runs(cells):
    runs = []
    for lo, hi in cells:
        if runs and runs[-1][1] == lo:
            runs[-1] = (runs[-1][0], hi)
        else:
            runs.append((lo, hi))
    return runs
