"""Secret-sharing suitability of a code: weight ratio and minimal codewords.

A code works cleanly as a secret sharing scheme (first coordinate in
the dealer role) when every nonzero codeword is minimal, that is, no
other nonzero codeword's support sits strictly inside its support.
The standard sufficient condition is w_min / w_max > (p-1)/p, compared
here as exact rationals.  Enumeration double-checks it at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .code import DefiningSet, WeightDistribution, build_code_weights

ENUMERATION_CAP = 1 << 20
ELEMENT_SCAN_CAP = 1 << 22


@dataclass(frozen=True)
class RatioReport:
    p: int
    w_min: int
    w_max: int
    ratio: Fraction
    threshold: Fraction
    passes: bool
    m_congruence_case: str = ""
    closed_form_ratio: Fraction | None = None

    def to_json_dict(self) -> dict:
        out = {
            "w_min": self.w_min,
            "w_max": self.w_max,
            "ratio": [self.ratio.numerator, self.ratio.denominator],
            "raw_ratio": [self.w_min, self.w_max],
            "threshold": [self.threshold.numerator, self.threshold.denominator],
            "passes": self.passes,
        }
        if self.m_congruence_case:
            out["m_congruence_case"] = self.m_congruence_case
            out["closed_form_ratio"] = [
                self.closed_form_ratio.numerator,
                self.closed_form_ratio.denominator,
            ]
        return out


def cubic_trace_ratio_case(m: int) -> tuple[str, Fraction]:
    """Closed-form w_min/w_max for the binary cubic-trace family, keyed
    by the residue of m (mod 8 in the odd cases, mod 4 in the even)."""
    if m < 4:
        raise ValueError("cases start at m = 4")
    u = 2 ** (m - 2)
    if m % 2 == 0:
        if m % 4 == 2:
            half = 2 ** ((m - 2) // 2)
            return "m = 2 mod 4", Fraction(u - half, u + half)
        if m % 8 == 4:
            return "m = 4 mod 8", Fraction(u, u + 2 ** (m // 2))
        return "m = 0 mod 8", Fraction(u - 2 ** (m // 2), u)
    half = 2 ** ((m - 1) // 2)
    if m % 8 in (1, 7):
        return "m = 1 or 7 mod 8", Fraction(u, u + half)
    return "m = 3 or 5 mod 8", Fraction(u - half, u)


def ratio_check(wd: WeightDistribution, *, tr_cubic: bool = False) -> RatioReport:
    """Exact w_min/w_max > (p-1)/p test on a weight distribution."""
    if wd.w_max is None:
        raise ValueError("distribution has no nonzero weight")
    ratio = Fraction(wd.d_min, wd.w_max)
    threshold = Fraction(wd.p - 1, wd.p)
    case, closed = "", None
    if tr_cubic:
        if wd.p != 2:
            raise ValueError("the cubic-trace family is binary")
        case, closed = cubic_trace_ratio_case(wd.m)
        if closed != ratio:
            raise AssertionError(
                f"closed-form ratio {closed} disagrees with computed {ratio}"
            )
    return RatioReport(
        p=wd.p, w_min=wd.d_min, w_max=wd.w_max, ratio=ratio,
        threshold=threshold, passes=ratio > threshold,
        m_congruence_case=case, closed_form_ratio=closed,
    )


@dataclass(frozen=True)
class MinimalReport:
    p: int
    n: int
    k: int
    total_nonzero: int
    minimal_count: int
    all_minimal: bool
    minimal_supports: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "p": self.p, "n": self.n, "k": self.k,
            "total_nonzero": self.total_nonzero,
            "minimal_count": self.minimal_count,
            "all_minimal": self.all_minimal,
        }


def _support_masks(ds: DefiningSet) -> dict[int, int]:
    """Support bitmask -> number of x values mapping to it; bit i is
    coordinate i of the canonically ordered defining set."""
    f = ds.field
    els = np.asarray(ds.elements, dtype=np.int64)
    masks: dict[int, int] = {}
    for x in range(f.q):
        nz = f.TR[f.scalar_mul_vec(x, els)] != 0
        mask = int.from_bytes(np.packbits(nz, bitorder="little").tobytes(), "little")
        masks[mask] = masks.get(mask, 0) + 1
    return masks


def minimal_codewords(
    ds: DefiningSet, wd: WeightDistribution | None = None
) -> tuple[MinimalReport, RatioReport]:
    """Enumerate codeword supports and count the minimal codewords.

    When the ratio criterion passes, every nonzero codeword must come
    out minimal; a counterexample would break the scheme built on the
    code, so it aborts with an error instead of a quiet report.
    """
    f = ds.field
    if wd is None:
        wd = build_code_weights(ds)
    if f.p**wd.k > ENUMERATION_CAP:
        raise ValueError(f"p^k = {f.p**wd.k} exceeds the enumeration bound")
    if f.q > ELEMENT_SCAN_CAP:
        raise ValueError(f"q = {f.q} exceeds the enumeration bound")
    ratio = ratio_check(wd)

    raw_masks = _support_masks(ds)
    collapse = raw_masks.pop(0)
    if collapse != f.p ** (f.m - wd.k):
        raise AssertionError("zero-support count disagrees with the kernel size")
    counts = {}
    for mask, raw in raw_masks.items():
        cw, rem = divmod(raw, collapse)
        if rem:
            raise AssertionError("support multiplicity not divisible by kernel size")
        counts[mask] = cw

    by_popcount = sorted(counts, key=lambda mk: (mk.bit_count(), mk))
    minimal = []
    minimal_count = 0
    for i, mask in enumerate(by_popcount):
        is_min = True
        for other in by_popcount[:i]:
            if other.bit_count() == mask.bit_count():
                break
            if other & mask == other:
                is_min = False
                break
        if is_min:
            minimal.append(mask)
            minimal_count += counts[mask]

    total = f.p**wd.k - 1
    all_minimal = minimal_count == total
    if ratio.passes and not all_minimal:
        raise RuntimeError(
            "ratio criterion passed but a non-minimal codeword exists; "
            f"{total - minimal_count} of {total} codewords are covered"
        )
    report = MinimalReport(
        p=f.p, n=ds.n, k=wd.k, total_nonzero=total,
        minimal_count=minimal_count, all_minimal=all_minimal,
        minimal_supports=tuple(minimal),
    )
    return report, ratio
