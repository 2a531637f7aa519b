"""Python face of the Domb sequence laboratory.

The compiled core hands back exact values as strings; the helpers here
upgrade them to Fractions where that is convenient.
"""

from fractions import Fraction
import json

try:
    from ._core import (  # noqa: F401
        apery_limit_estimate,
        apery_ratio,
        convergents,
        domb_direct,
        eichler_coeffs,
        hauptmodul_coeffs,
        indicial_roots,
        run_suite,
        sequence_table,
        telescoped_sum,
        weight2_coeffs,
        wronskian,
        zeta3,
    )
except ImportError:  # running against a build tree, module not yet installed
    from _core import (  # noqa: F401
        apery_limit_estimate,
        apery_ratio,
        convergents,
        domb_direct,
        eichler_coeffs,
        hauptmodul_coeffs,
        indicial_roots,
        run_suite,
        sequence_table,
        telescoped_sum,
        weight2_coeffs,
        wronskian,
        zeta3,
    )

__all__ = [
    "apery_limit_estimate",
    "apery_ratio",
    "apery_ratio_fraction",
    "convergents",
    "domb_direct",
    "domb_numbers",
    "eichler_coeffs",
    "hauptmodul_coeffs",
    "indicial_roots",
    "run_suite",
    "run_suite_report",
    "sequence_table",
    "telescoped_sum",
    "weight2_coeffs",
    "wronskian",
    "zeta3",
]


def domb_numbers(n_max):
    """The integer sequence D_0..D_{n_max} as Python ints."""
    return [int(x) for x in sequence_table(n_max)["domb"]]


def apery_ratio_fraction(n):
    """B_n / D_n as a Fraction."""
    return Fraction(apery_ratio(n))


def run_suite_report(**kwargs):
    """run_suite with the JSON report already parsed."""
    return json.loads(run_suite(**kwargs))
