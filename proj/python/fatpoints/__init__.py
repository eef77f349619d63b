"""Exact conjectural Hilbert functions of fat point schemes.

Thin wrapper over the compiled core.  Arbitrary-precision results cross the
boundary as decimal strings; `as_int` is provided for convenience.
"""

from ._core import (
    binomial,
    ctr_inequalities,
    duality_residual,
    f_prime,
    g,
    g_obstruction_sum,
    g_recursion,
    hpts,
    k_of,
    m_of,
    scan,
    ubda,
)

__all__ = [
    "binomial",
    "ctr_inequalities",
    "duality_residual",
    "f_prime",
    "g",
    "g_obstruction_sum",
    "g_recursion",
    "hpts",
    "k_of",
    "m_of",
    "scan",
    "ubda",
    "as_int",
]


def as_int(value):
    """Coerce a decimal-string result (or a plain int) to int."""
    return int(value)
