"""Binary exponential sums and Walsh spectra, all integer valued.

S(a, b) = sum over x in GF(2^m) of (-1)^Tr(a x^3 + b x).  For odd m the
value at (1, 1) has a closed form in m; for even m the closed forms go
through cubic residues and the affine quartic a^2 x^4 + a x = b^2, which
is GF(2)-linear in x and solved here by elimination over GF(2).  Walsh
spectra come in two routes: an exact integer fast transform and a naive
quadratic oracle.
"""

from __future__ import annotations

import functools

import numpy as np

from .field import Field


def _require_binary(f: Field):
    if f.p != 2:
        raise ValueError("exponential sums here are defined over GF(2^m) only")


def weil_sum(f: Field, a: int, b: int) -> int:
    """S(a, b) by direct summation over the field."""
    _require_binary(f)
    xs = np.arange(f.q, dtype=np.int64)
    cubes = f.pow_vec(xs, 3)
    arg = f.scalar_mul_vec(a, cubes) ^ f.scalar_mul_vec(b, xs)
    ones = int(f.TR[arg].sum())
    return f.q - 2 * ones


def carlitz_prediction(m: int) -> int:
    """Closed form for S(1, 1), odd m: (-1)^((m^2-1)/8) * 2^((m+1)/2)."""
    if m % 2 == 0:
        raise ValueError("closed form needs odd m")
    sign = -1 if ((m * m - 1) // 8) % 2 else 1
    return sign * 2 ** ((m + 1) // 2)


def is_cube(f: Field, a: int) -> bool:
    if a == 0:
        raise ValueError("0 is excluded")
    if (f.q - 1) % 3:
        return True
    return int(f.LOG[a]) % 3 == 0


class QuarticSolver:
    """Solutions of a^2 x^4 + a x = c over GF(2^m).

    The left side is GF(2)-linear in x, so build the m x m coordinate
    matrix column by column and keep an eliminated basis; each solve is
    then a pass over the pivots.  Exhibits an explicit solution and the
    kernel, which has size 1 or 4.
    """

    def __init__(self, f: Field, a: int):
        _require_binary(f)
        if a == 0:
            raise ValueError("a must be nonzero")
        self.field = f
        self.a = a
        a2 = f.mul(a, a)
        self.pivots: list[tuple[int, int, int]] = []  # (pivot bit, value, combo mask)
        self.kernel_basis: list[int] = []
        for j in range(f.m):
            basis = 1 << j
            v = f.mul(a2, f.pow(basis, 4)) ^ f.mul(a, basis)
            mask = basis
            for pb, pv, pm in self.pivots:
                if (v >> pb) & 1:
                    v ^= pv
                    mask ^= pm
            if v:
                self.pivots.append((v.bit_length() - 1, v, mask))
            else:
                self.kernel_basis.append(mask)

    def solve(self, c: int):
        """One solution x with a^2 x^4 + a x = c, or None."""
        w = c
        sol = 0
        for pb, pv, pm in self.pivots:
            if (w >> pb) & 1:
                w ^= pv
                sol ^= pm
        return sol if w == 0 else None

    def solutions(self, c: int) -> list[int]:
        x0 = self.solve(c)
        if x0 is None:
            return []
        sols = [x0]
        for kmask in self.kernel_basis:
            sols = sols + [s ^ kmask for s in sols]
        return sols


@functools.lru_cache(maxsize=None)
def _solver(f: Field, a: int) -> QuarticSolver:
    return QuarticSolver(f, a)


def coulter_s_a0(f: Field, a: int) -> int:
    """Closed form for S(a, 0), even m, a != 0."""
    _require_binary(f)
    if f.m % 2:
        raise ValueError("closed form needs even m")
    if a == 0:
        raise ValueError("a must be nonzero")
    unit = (-1) ** (f.m // 2) * 2 ** (f.m // 2)
    if is_cube(f, a):
        return -2 * unit
    return unit


def coulter_s_ab(f: Field, a: int, b: int) -> int:
    """Closed form for S(a, b), even m, a and b nonzero.

    Goes through a solution x0 of a^2 x^4 + a x = b^2.  The sign factor
    Tr(a x0^3) must agree across the whole solution coset; that is
    asserted, not assumed.
    """
    _require_binary(f)
    if f.m % 2:
        raise ValueError("closed form needs even m")
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    unit = (-1) ** (f.m // 2) * 2 ** (f.m // 2)
    solver = _solver(f, a)
    c = f.mul(b, b)
    if not is_cube(f, a):
        x0 = solver.solve(c)
        if x0 is None:
            raise AssertionError("permutation case must be solvable")
        return unit * (-1) ** f.trace(f.mul(a, f.pow(x0, 3)))
    sols = solver.solutions(c)
    if not sols:
        return 0
    signs = {f.trace(f.mul(a, f.pow(s, 3))) for s in sols}
    if len(signs) != 1:
        raise AssertionError("Tr(a x0^3) varies across the solution coset")
    chi = (-1) ** signs.pop()
    # Cube a reduces to the a = 1 sum by substitution, so the magnitude is
    # always 2^(m/2 + 1) here; it does not depend on Tr(a).
    return -2 * unit * chi


def quartic_solvable_at_one(f: Field) -> bool:
    """Whether x^4 + x = 1 has a root; closed form is m = 0 mod 4, and the
    answer is cross-checked against an actual elimination solve."""
    _require_binary(f)
    if f.m % 2:
        raise ValueError("defined for even m")
    predicted = f.m % 4 == 0
    found = _solver(f, 1).solve(1)
    if (found is not None) != predicted:
        raise AssertionError("closed form and elimination disagree on x^4 + x = 1")
    return predicted


# ----------------------------------------------------------------------
# Walsh spectra


def fwht(values) -> np.ndarray:
    """In-place style fast transform with exact int64 butterflies."""
    out = np.array(values, dtype=np.int64)
    n = len(out)
    if n & (n - 1):
        raise ValueError("length must be a power of 2")
    h = 1
    while h < n:
        view = out.reshape(-1, 2, h)
        a = view[:, 0, :].copy()
        b = view[:, 1, :].copy()
        view[:, 0, :] = a + b
        view[:, 1, :] = a - b
        h *= 2
    return out


def _walsh_permutation(f: Field) -> np.ndarray:
    # pi(w) has bit i equal to Tr(w alpha^i), so the standard hypercube
    # pairing at pi(w) equals the trace pairing at w
    perm = np.zeros(f.q, dtype=np.int64)
    xs = np.arange(f.q, dtype=np.int64)
    for i in range(f.m):
        perm |= f.TR[f.scalar_mul_vec(1 << i, xs)].astype(np.int64) << i
    return perm


@functools.lru_cache(maxsize=None)
def _walsh_permutation_cached(f: Field):
    perm = _walsh_permutation(f)
    perm.setflags(write=False)
    return perm


class WalshSpectrum:
    """All values of w -> sum_x (-1)^(f(x) + Tr(w x)) for one Boolean f."""

    def __init__(self, f: Field, values: np.ndarray, n_f: int):
        self.field = f
        self.values = values
        self.n_f = n_f
        if int(values[0]) != f.q - 2 * n_f:
            raise AssertionError("spectrum at 0 disagrees with the weight of f")
        if int(np.sum(values.astype(object) ** 2)) != f.q * f.q:
            raise AssertionError("Parseval check failed")

    def value(self, w: int) -> int:
        return int(self.values[w])

    def max_value(self) -> int:
        return int(self.values.max())


def walsh_transform(f: Field, table) -> WalshSpectrum:
    """Fast exact spectrum of a truth table indexed by element code."""
    _require_binary(f)
    table = np.asarray(table, dtype=np.int64)
    if table.shape != (f.q,) or not np.all((table == 0) | (table == 1)):
        raise ValueError("truth table must be q bits")
    signs = 1 - 2 * table
    std = fwht(signs)
    values = std[_walsh_permutation_cached(f)]
    values.setflags(write=False)
    return WalshSpectrum(f, values, int(table.sum()))


def walsh_naive(f: Field, table) -> np.ndarray:
    """Quadratic oracle for the same spectrum; keep to q <= 2^10."""
    _require_binary(f)
    table = np.asarray(table, dtype=np.int64)
    xs = np.arange(f.q, dtype=np.int64)
    out = np.empty(f.q, dtype=np.int64)
    for w in range(f.q):
        tr = f.TR[f.scalar_mul_vec(w, xs)].astype(np.int64)
        out[w] = f.q - 2 * int(((table + tr) % 2).sum())
    return out


def tr_cubic_table(f: Field) -> np.ndarray:
    """Truth table of x -> Tr(x^3)."""
    _require_binary(f)
    xs = np.arange(f.q, dtype=np.int64)
    return f.TR[f.pow_vec(xs, 3)].astype(np.int64)


# ----------------------------------------------------------------------


def n0_and_nb(f: Field, b: int) -> tuple[int, int]:
    """(n0, N_b): the count of x with Tr(x^3 + x) = 0, and of x with
    additionally Tr(b x) = 0.

    Computed twice, by direct counting and through S(1, 1) and S(1, b+1);
    the two routes must agree.
    """
    _require_binary(f)
    if b == 0:
        raise ValueError("b must be nonzero")
    xs = np.arange(f.q, dtype=np.int64)
    zero_cubic = f.TR[f.pow_vec(xs, 3) ^ xs] == 0
    n0 = int(zero_cubic.sum())
    nb = int((zero_cubic & (f.TR[f.scalar_mul_vec(b, xs)] == 0)).sum())

    s11 = weil_sum(f, 1, 1)
    if s11 % 2:
        raise AssertionError("S(1,1) must be even")
    n0_char = f.q // 2 + s11 // 2
    s1b1 = weil_sum(f, 1, b ^ 1)
    num = s11 + s1b1 + f.q
    if num % 4:
        raise AssertionError("character route for N_b is not divisible by 4")
    nb_char = num // 4

    if (n0, nb) != (n0_char, nb_char):
        raise AssertionError(
            f"counting and character routes disagree: {(n0, nb)} vs {(n0_char, nb_char)}"
        )
    return n0, nb
