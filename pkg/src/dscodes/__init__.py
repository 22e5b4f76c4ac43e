"""Exact-arithmetic workbench for trace-form linear codes over GF(p^m).

Codes are cut out by a defining set D: the codeword for x is the vector
of trace values Tr(x d) over d in D.  The package builds such codes,
computes weight distributions two independent ways, checks closed-form
predictions for several families, and reports secret-sharing viability
through minimal-codeword enumeration.
"""

from .code import (
    CodeSummary,
    DefiningSet,
    WeightDistribution,
    build_code_weights,
    dual_distance,
    dual_distance_at_least_3,
    griesmer_check,
    macwilliams_dual,
    pless_moments_check,
    summarize,
)
from .field import Field, alternate_field, get_field
from .secretshare import MinimalReport, RatioReport, minimal_codewords, ratio_check
from .spectra import WalshSpectrum, walsh_transform, weil_sum
from .theorems import ClaimId, TheoremReport, scan, scan_summary, thm1_property_test

__all__ = [
    "ClaimId",
    "CodeSummary",
    "DefiningSet",
    "Field",
    "MinimalReport",
    "RatioReport",
    "TheoremReport",
    "WalshSpectrum",
    "WeightDistribution",
    "alternate_field",
    "build_code_weights",
    "dual_distance",
    "dual_distance_at_least_3",
    "get_field",
    "griesmer_check",
    "macwilliams_dual",
    "minimal_codewords",
    "pless_moments_check",
    "ratio_check",
    "scan",
    "scan_summary",
    "summarize",
    "thm1_property_test",
    "walsh_transform",
    "weil_sum",
]

__version__ = "0.1.0"
