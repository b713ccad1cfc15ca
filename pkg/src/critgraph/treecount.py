"""Spanning-tree counts of C4 x Cn, three independent ways.

  * closed form:  4n h_s^4 g_s^2 for odd n = 2s+1, and
                  2^8 3^2 s e_s^4 f_s^2 for even n = 2s
                  (the two cases agree with the single expression
                  2^7 3^2 n e_{n/2}^4 f_{n/2}^2 without ever needing
                  half-integer indices);
  * matrix-tree:  exact determinant of the Laplacian with one row and
                  column deleted (any connected multigraph);
  * eigenvalues:  the count equals 4n times the product over j of
                  (4 - 2cos(2 pi j / n))^2 (6 - 2cos(2 pi j / n)),
                  checked in log space against the exact integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .exactla import det_bareiss
from .graph import Multigraph, laplacian
from .seq import SeqKind, derived_seq


@dataclass(frozen=True)
class TreeCountReport:
    """Results of the spanning-tree cross-checks for one n."""

    n: int
    closed_form: int
    matrix_tree: Optional[int] = None
    trig_log_residual: Optional[float] = None
    trig_tolerance: Optional[float] = None

    @property
    def matrix_matches(self) -> Optional[bool]:
        if self.matrix_tree is None:
            return None
        return self.matrix_tree == self.closed_form

    @property
    def trig_passed(self) -> Optional[bool]:
        if self.trig_log_residual is None or self.trig_tolerance is None:
            return None
        return abs(self.trig_log_residual) <= self.trig_tolerance


def tree_count_closed(n: int) -> int:
    """Spanning-tree count of C4 x Cn in closed form."""
    if n < 3:
        raise ValueError(f"C4 x Cn needs n >= 3, got {n}")
    if n % 2:
        s = (n - 1) // 2
        h = derived_seq(SeqKind.H, s)
        g = derived_seq(SeqKind.G, s)
        return 4 * n * h**4 * g**2
    s = n // 2
    e = derived_seq(SeqKind.E, s)
    f = derived_seq(SeqKind.F, s)
    return 2**8 * 3**2 * s * e**4 * f**2


def tree_count_matrix(g: Multigraph) -> int:
    """Spanning-tree count of any multigraph: determinant of the
    Laplacian with row 0 and column 0 deleted.  Returns 0 exactly when
    the graph is disconnected."""
    if g.vertex_count == 1:
        return 1
    reduced = laplacian(g).delete_row_col(0, 0)
    return det_bareiss(reduced)


def _log_big(x: int) -> float:
    """Natural log of a large positive integer: keep the top bits as a
    mantissa (at least 64 significant bits) and add the shifted-out
    exponent, so precision does not depend on the integer's size."""
    if x <= 0:
        raise ValueError("logarithm of a non-positive integer")
    shift = max(0, x.bit_length() - 128)
    return math.log(x >> shift) + shift * math.log(2)


def trig_product_check(n: int, rel_tolerance: float = 1e-9) -> TreeCountReport:
    """Compare the closed-form count against the Laplacian-eigenvalue
    product, in log space.

    The floating-point sum of 2*ln(4 - 2cos(2 pi j/n)) + ln(6 - 2cos(2
    pi j/n)) over 1 <= j < n is compared to ln(count) - ln(4n); the
    report carries the relative residual and passes iff it is within
    ``rel_tolerance``.
    """
    if rel_tolerance <= 0:
        raise ValueError(f"relative tolerance must be positive, got {rel_tolerance}")
    count = tree_count_closed(n)
    total = 0.0
    for j in range(1, n):
        c = 2.0 * math.cos(2.0 * math.pi * j / n)
        total += 2.0 * math.log(4.0 - c) + math.log(6.0 - c)
    target = _log_big(count) - math.log(4 * n)
    residual = (total - target) / target
    return TreeCountReport(
        n=n,
        closed_form=count,
        trig_log_residual=residual,
        trig_tolerance=rel_tolerance,
    )
