"""Types of matrices by their residual characteristic polynomial."""
from __future__ import annotations

import numpy as np
from sympy.ntheory.residue_ntheory import is_quad_residue

from whittaker.components.local_ring import RingSpec, units
from whittaker.const import (
    MATRIX_TYPES,
    TYPE_CUSPIDAL,
    TYPE_NON_REGULAR,
    TYPE_SNS,
    TYPE_SS,
)
from whittaker.exceptions import BadParam

from .groups import GroupHandle
from .matrices import Codes, Mat2, MatrixOps, matrix_ops


def _residue_types(p: int) -> np.ndarray:
    """Return the type index of every discriminant residue mod p (nonzero)."""
    squares = np.array([bool(x) and is_quad_residue(x, p) for x in range(p)])
    split, cuspidal = MATRIX_TYPES.index(TYPE_SS), MATRIX_TYPES.index(TYPE_CUSPIDAL)
    return np.where(squares, split, cuspidal)


def classify_codes(ops: MatrixOps, codes: Codes) -> np.ndarray:
    """Return indices into MATRIX_TYPES for matrices given by code (any matrices)."""
    p = ops.ring.p
    a, b, c, d = (x % p for x in ops.decode(codes))
    scalar = (b == 0) & (c == 0) & (a == d)
    disc = ((a + d) ** 2 - 4 * (a * d - b * c)) % p
    result = _residue_types(p)[disc]
    result = np.where(disc == 0, MATRIX_TYPES.index(TYPE_SNS), result)
    return np.where(scalar, MATRIX_TYPES.index(TYPE_NON_REGULAR), result)


def classify_matrix(x: Mat2) -> str:
    """Return the type of x from its reduction modulo pi."""
    ops = matrix_ops(x.ring)
    return MATRIX_TYPES[int(classify_codes(ops, np.int64(x.code)))]


def is_regular(x: Mat2) -> bool:
    """Return True if x is not scalar modulo pi."""
    return classify_matrix(x) != TYPE_NON_REGULAR


def f_exponent(t: int, i: int, ring: RingSpec) -> int:
    """Return f(t, i), the exponent bounding the intersections with Z^t."""
    ell, ell1, ell2 = ring.ell, ring.ell1, ring.ell2
    if not 0 <= t <= ell:
        raise BadParam("t", t, f"must be in [0, {ell}]")
    if not 1 <= i <= ell1:
        raise BadParam("i", i, f"must be in [1, {ell1}]")
    if ell2 > t:
        return t - max(t - i, 0)
    if i + t >= ell:
        return ell1
    return t - ell2 + i


def sns_shape_matrices(ring: RingSpec, lam: int, t: int) -> Codes:
    """Return (a b; pi^(ell-t) lam-a) with lam - 2a = 0 mod pi and b a unit."""
    if ring.ell - t < 2:
        raise BadParam("t", t, "needs ell - t >= 2")
    ops = matrix_ops(ring)
    tables = ring.tables
    r = np.arange(ring.size)
    a = r[tables.add[lam, tables.neg[tables.mul[2, r]]] % ring.p == 0]
    a, b = (x.ravel() for x in np.meshgrid(a, units(ring), indexing="ij"))
    c = ops.uniformizer_power(ring.ell - t, 1)
    return ops.encode(a, b, int(c), tables.add[lam, tables.neg[a]])


def count_similarity_classes(G: GroupHandle, matrices: Codes) -> int:
    """Return the number of G-conjugacy classes met by matrices."""
    ops = G.ops
    remaining = np.unique(matrices)
    count = 0
    while len(remaining):
        orbit = np.unique(ops.conj(G.elements, remaining[0]))
        remaining = np.setdiff1d(remaining, orbit, assume_unique=True)
        count += 1
    return count
