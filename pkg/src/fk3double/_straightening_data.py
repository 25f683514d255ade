"""Frozen straightening constants for the double.

Each entry rewrites a product of one raising and one lowering letter in
the opposite order plus group-algebra terms.  YX holds y_t x_s as
(t, s, [(s2, t2, coeff)], [(g, h, coeff)]) meaning
y_t x_s = sum coeff x_{s2} y_{t2} + sum coeff g delta_h, and XY holds the
mirror expansion of x_s y_t.  Coefficients are 4-tuples of ints as in
Scalar.to_json().  The test suite re-derives both tables from the
double construction and compares.
"""

YX = [('(12)', '(12)', [('(12)', '(12)', (-1, 1, 0, 1))], [('e', 'e', (1, 1, 0, 1)), ('e', '(12)', (1, 1, 0, 1)), ('e', '(13)', (1, 1, 0, 1)), ('e', '(23)', (1, 1, 0, 1)), ('e', '(123)', (1, 1, 0, 1)), ('e', '(132)', (1, 1, 0, 1)), ('(12)', 'e', (-1, 1, 0, 1)), ('(12)', '(12)', (1, 1, 0, 1))]), ('(12)', '(13)', [('(13)', '(23)', (-1, 1, 0, 1))], [('(13)', '(12)', (1, 1, 0, 1)), ('(13)', '(132)', (-1, 1, 0, 1))]), ('(12)', '(23)', [('(23)', '(13)', (-1, 1, 0, 1))], [('(23)', '(12)', (1, 1, 0, 1)), ('(23)', '(123)', (-1, 1, 0, 1))]), ('(13)', '(12)', [('(12)', '(23)', (-1, 1, 0, 1))], [('(12)', '(13)', (1, 1, 0, 1)), ('(12)', '(123)', (-1, 1, 0, 1))]), ('(13)', '(13)', [('(13)', '(13)', (-1, 1, 0, 1))], [('e', 'e', (1, 1, 0, 1)), ('e', '(12)', (1, 1, 0, 1)), ('e', '(13)', (1, 1, 0, 1)), ('e', '(23)', (1, 1, 0, 1)), ('e', '(123)', (1, 1, 0, 1)), ('e', '(132)', (1, 1, 0, 1)), ('(13)', 'e', (-1, 1, 0, 1)), ('(13)', '(13)', (1, 1, 0, 1))]), ('(13)', '(23)', [('(23)', '(12)', (-1, 1, 0, 1))], [('(23)', '(13)', (1, 1, 0, 1)), ('(23)', '(132)', (-1, 1, 0, 1))]), ('(23)', '(12)', [('(12)', '(13)', (-1, 1, 0, 1))], [('(12)', '(23)', (1, 1, 0, 1)), ('(12)', '(132)', (-1, 1, 0, 1))]), ('(23)', '(13)', [('(13)', '(12)', (-1, 1, 0, 1))], [('(13)', '(23)', (1, 1, 0, 1)), ('(13)', '(123)', (-1, 1, 0, 1))]), ('(23)', '(23)', [('(23)', '(23)', (-1, 1, 0, 1))], [('e', 'e', (1, 1, 0, 1)), ('e', '(12)', (1, 1, 0, 1)), ('e', '(13)', (1, 1, 0, 1)), ('e', '(23)', (1, 1, 0, 1)), ('e', '(123)', (1, 1, 0, 1)), ('e', '(132)', (1, 1, 0, 1)), ('(23)', 'e', (-1, 1, 0, 1)), ('(23)', '(23)', (1, 1, 0, 1))])]

XY = [('(12)', '(12)', [('(12)', '(12)', (-1, 1, 0, 1))], [('e', 'e', (1, 1, 0, 1)), ('e', '(12)', (1, 1, 0, 1)), ('e', '(13)', (1, 1, 0, 1)), ('e', '(23)', (1, 1, 0, 1)), ('e', '(123)', (1, 1, 0, 1)), ('e', '(132)', (1, 1, 0, 1)), ('(12)', 'e', (-1, 1, 0, 1)), ('(12)', '(12)', (1, 1, 0, 1))]), ('(12)', '(13)', [('(23)', '(12)', (-1, 1, 0, 1))], [('(12)', '(23)', (1, 1, 0, 1)), ('(12)', '(132)', (-1, 1, 0, 1))]), ('(12)', '(23)', [('(13)', '(12)', (-1, 1, 0, 1))], [('(12)', '(13)', (1, 1, 0, 1)), ('(12)', '(123)', (-1, 1, 0, 1))]), ('(13)', '(12)', [('(23)', '(13)', (-1, 1, 0, 1))], [('(13)', '(23)', (1, 1, 0, 1)), ('(13)', '(123)', (-1, 1, 0, 1))]), ('(13)', '(13)', [('(13)', '(13)', (-1, 1, 0, 1))], [('e', 'e', (1, 1, 0, 1)), ('e', '(12)', (1, 1, 0, 1)), ('e', '(13)', (1, 1, 0, 1)), ('e', '(23)', (1, 1, 0, 1)), ('e', '(123)', (1, 1, 0, 1)), ('e', '(132)', (1, 1, 0, 1)), ('(13)', 'e', (-1, 1, 0, 1)), ('(13)', '(13)', (1, 1, 0, 1))]), ('(13)', '(23)', [('(12)', '(13)', (-1, 1, 0, 1))], [('(13)', '(12)', (1, 1, 0, 1)), ('(13)', '(132)', (-1, 1, 0, 1))]), ('(23)', '(12)', [('(13)', '(23)', (-1, 1, 0, 1))], [('(23)', '(13)', (1, 1, 0, 1)), ('(23)', '(132)', (-1, 1, 0, 1))]), ('(23)', '(13)', [('(12)', '(23)', (-1, 1, 0, 1))], [('(23)', '(12)', (1, 1, 0, 1)), ('(23)', '(123)', (-1, 1, 0, 1))]), ('(23)', '(23)', [('(23)', '(23)', (-1, 1, 0, 1))], [('e', 'e', (1, 1, 0, 1)), ('e', '(12)', (1, 1, 0, 1)), ('e', '(13)', (1, 1, 0, 1)), ('e', '(23)', (1, 1, 0, 1)), ('e', '(123)', (1, 1, 0, 1)), ('e', '(132)', (1, 1, 0, 1)), ('(23)', 'e', (-1, 1, 0, 1)), ('(23)', '(23)', (1, 1, 0, 1))])]
