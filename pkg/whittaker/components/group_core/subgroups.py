"""Named subgroups of GL2(o_ell)."""
from __future__ import annotations

import inspect
import logging
from collections.abc import Callable
from typing import Any

import numpy as np

from whittaker.components.local_ring import RingSpec, psi_exponent, units
from whittaker.const import EXHAUSTIVE_CHECK_LIMIT
from whittaker.exceptions import BadParam, BadShape, BudgetExceeded, NotASubgroup

from .const import (
    CHUNK_SIZE,
    KIND_B,
    KIND_CENTRALIZER,
    KIND_INTERSECTION,
    KIND_K,
    KIND_N,
    KIND_NCA,
    KIND_P2,
    KIND_PRODUCT,
    KIND_RX,
    KIND_SA,
    KIND_T,
    KIND_U,
    KIND_UA,
    KIND_Z,
    KIND_ZT,
    KIND_ZTU,
    KIND_ZU,
    SUBGROUP_KINDS,
)
from .groups import GroupHandle, MatrixGroup, enumerate_gl2
from .matrices import Codes, Mat2, MatrixOps

LOGGER = logging.getLogger(__name__)


class Subgroup(MatrixGroup):
    """A named subgroup of a GroupHandle.

    borel_family is (trivial_x, t) when the subgroup is
    {(x y; 0 x*u) : x in X, u in 1 + pi^t o} with X = {1} if trivial_x else o^x.
    """

    def __init__(
        self,
        parent: GroupHandle,
        kind: str,
        elements: Codes,
        params: dict[str, Any] | None = None,
        generators: Codes | None = None,
        borel_family: tuple[bool, int] | None = None,
    ) -> None:
        self.parent = parent
        self.kind = kind
        self.params = params or {}
        self.borel_family = borel_family
        name = _subgroup_name(kind, self.params)
        super().__init__(parent.ring, elements, name, generators)

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {"kind": self.kind, "params": self.params, "order": self.order}


def _subgroup_name(kind: str, params: dict[str, Any]) -> str:
    if not params:
        return kind
    values = ", ".join(f"{key}={value}" for key, value in sorted(params.items()))
    return f"{kind}({values})"


def gamma(ring: RingSpec, t: int) -> np.ndarray:
    """Return the representatives of 1 + pi^t o (all units for t = 0)."""
    if t == 0:
        return units(ring)
    step = ring.p**t
    offsets = (np.arange(ring.size // step) * step) % ring.size
    return np.unique(ring.tables.add[1, offsets])


def order_formula(kind: str, ring: RingSpec, **params: Any) -> int | None:
    """Return the closed-form order of a parametrized subgroup, if known."""
    q, ell = ring.q, ring.ell
    unit_count = ring.unit_count
    if kind == KIND_Z:
        return unit_count
    if kind == KIND_U:
        return q**ell
    if kind == KIND_T:
        return unit_count**2
    if kind == KIND_B:
        return unit_count**2 * q**ell
    if kind in (KIND_ZU, KIND_P2):
        return unit_count * q**ell
    if kind == KIND_ZT:
        t = params["t"]
        return unit_count**2 if t == 0 else unit_count * q ** (ell - t)
    if kind == KIND_ZTU:
        return order_formula(KIND_ZT, ring, **params) * q**ell
    if kind == KIND_K:
        return q ** (4 * (ell - params["i"]))
    return None


def _grid(*axes: np.ndarray) -> list[np.ndarray]:
    return [axis.ravel() for axis in np.meshgrid(*axes, indexing="ij")]


def _label(ring: RingSpec, code: int) -> dict[str, str]:
    return {"A": str(Mat2.from_code(ring, code))}


def _matrix_code(ring: RingSpec, matrix: Mat2 | Any, level: int | None = None) -> int:
    """Return the code over ring of the canonical lift of matrix mod pi^level."""
    if not isinstance(matrix, Mat2):
        matrix = Mat2.of(ring, matrix)
    if matrix.ring.p != ring.p or matrix.ring.flavor != ring.flavor:
        raise BadParam("A", str(matrix), f"not a matrix over a quotient of {ring}")
    modulus = ring.p ** (level if level is not None else ring.ell)
    entries = (matrix.a, matrix.b, matrix.c, matrix.d)
    a, b, c, d = (entry.rep % modulus for entry in entries)
    return int(((a * ring.size + b) * ring.size + c) * ring.size + d)


def is_scalar_mod(ops: MatrixOps, code: int, i: int) -> bool:
    """Return True if the matrix is scalar modulo pi^i."""
    a, b, c, d = (int(x) for x in ops.decode(np.int64(code)))
    m = ops.ring.p**i
    return b % m == 0 and c % m == 0 and (a - d) % m == 0


def product_set(ops: MatrixOps, left: Codes, right: Codes) -> Codes:
    """Return the sorted set {x y : x in left, y in right}."""
    rows = max(1, CHUNK_SIZE // max(len(right), 1))
    parts = []
    for start in range(0, len(left), rows):
        block = ops.mul(left[start : start + rows, None], right[None, :])
        parts.append(np.unique(block))
    return np.unique(np.concatenate(parts)) if parts else np.empty(0, dtype=np.int64)


def filter_group(G: GroupHandle, predicate: Callable[[Codes], np.ndarray]) -> Codes:
    """Return the elements of G satisfying predicate, block by block if G is lazy."""
    if G.materialized:
        return G.elements[predicate(G.elements)]
    found = []
    total = 0
    for block in G.iter_blocks():
        selected = block[predicate(block)]
        total += len(selected)
        if total > G.budget:
            raise BudgetExceeded("filtered subgroup", total, G.budget)
        found.append(selected)
    return np.sort(np.concatenate(found))


def _build_b(G: GroupHandle) -> Subgroup:
    u, r = units(G.ring), np.arange(G.ring.size)
    a, b, d = _grid(u, r, u)
    return Subgroup(G, KIND_B, G.ops.encode(a, b, 0, d), borel_family=(False, 0))


def _build_u(G: GroupHandle) -> Subgroup:
    r = np.arange(G.ring.size)
    elements = G.ops.encode(1, r, 0, 1)
    return Subgroup(G, KIND_U, elements, borel_family=(True, G.ring.ell))


def _build_t(G: GroupHandle) -> Subgroup:
    a, d = _grid(units(G.ring), units(G.ring))
    return Subgroup(G, KIND_T, G.ops.encode(a, 0, 0, d))


def _build_z(G: GroupHandle) -> Subgroup:
    u = units(G.ring)
    return Subgroup(G, KIND_Z, G.ops.encode(u, 0, 0, u))


def _check_t(ring: RingSpec, t: Any) -> int:
    if not isinstance(t, (int, np.integer)) or not 0 <= t <= ring.ell:
        raise BadParam("t", t, f"must be an integer in [0, {ring.ell}]")
    return int(t)


def _build_zt(G: GroupHandle, t: int) -> Subgroup:
    t = _check_t(G.ring, t)
    x, g = _grid(units(G.ring), gamma(G.ring, t))
    return Subgroup(G, KIND_ZT, G.ops.encode(x, 0, 0, G.ops.times(x, g)), {"t": t})


def _build_zu(G: GroupHandle) -> Subgroup:
    u, r = units(G.ring), np.arange(G.ring.size)
    x, b = _grid(u, r)
    elements = G.ops.encode(x, b, 0, x)
    return Subgroup(G, KIND_ZU, elements, borel_family=(False, G.ring.ell))


def _build_ztu(G: GroupHandle, t: int) -> Subgroup:
    t = _check_t(G.ring, t)
    x, b, g = _grid(units(G.ring), np.arange(G.ring.size), gamma(G.ring, t))
    elements = G.ops.encode(x, b, 0, G.ops.times(x, g))
    return Subgroup(G, KIND_ZTU, elements, {"t": t}, borel_family=(False, t))


def _build_p2(G: GroupHandle) -> Subgroup:
    a, b = _grid(units(G.ring), np.arange(G.ring.size))
    return Subgroup(G, KIND_P2, G.ops.encode(a, b, 0, 1))


def congruence_elements(ring: RingSpec, ops: MatrixOps, i: int) -> Codes:
    """Return the codes of K(i) = I + pi^i M."""
    step = ring.p**i
    e = (np.arange(max(ring.size // step, 1)) * step) % ring.size
    a, b, c, d = _grid(e, e, e, e)
    one = ring.tables.add[1]
    return ops.encode(one[a], b, c, one[d])


def _build_k(G: GroupHandle, i: int) -> Subgroup:
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= G.ring.ell:
        raise BadParam("i", i, f"must be an integer in [1, {G.ring.ell}]")
    elements = congruence_elements(G.ring, G.ops, int(i))
    return Subgroup(G, KIND_K, elements, {"i": int(i)})


def centralizer_elements(G: GroupHandle, code: int) -> Codes:
    """Return C_G(A) for the matrix with the given code."""
    ops = G.ops
    if not is_scalar_mod(ops, code, 1):
        a, b, c, d = (int(v) for v in ops.decode(np.int64(code)))
        x, y = _grid(np.arange(G.ring.size), np.arange(G.ring.size))
        mul, add = G.ring.tables.mul, G.ring.tables.add
        codes = ops.encode(
            add[x, mul[y, a]], mul[y, b], mul[y, c], add[x, mul[y, d]]
        )
        return np.unique(codes[ops.is_invertible(codes)])
    return filter_group(G, lambda block: ops.mul(block, code) == ops.mul(code, block))


def _build_centralizer(G: GroupHandle, A: Any) -> Subgroup:
    code = _matrix_code(G.ring, A)
    elements = centralizer_elements(G, code)
    return Subgroup(G, KIND_CENTRALIZER, elements, _label(G.ring, code))


def _level_one_matrix(G: GroupHandle, A: Any) -> tuple[int, int]:
    """Return (ell1, code over o_ell of the canonical lift of A mod pi^ell1)."""
    ell1 = G.ring.ell1
    return ell1, _matrix_code(G.ring, A, ell1)


def inertia_elements(G: GroupHandle, code: int) -> Codes:
    """Return the preimage in G of the centralizer of A mod pi^ell1."""
    ring, ops = G.ring, G.ops
    ell1, ell2 = ring.ell1, ring.ell2
    if ell1 == 0:
        return G.elements
    base_ring = ring.truncate(ell1)
    base = enumerate_gl2(base_ring)
    a, b, c, d = (int(v) % base_ring.size for v in ops.decode(np.int64(code)))
    base_code = int(base.ops.encode(a, b, c, d))
    residues = centralizer_elements(base, base_code)
    ra, rb, rc, rd = base.ops.decode(residues)
    step = ring.p**ell1
    high = np.arange(ring.p**ell2) * step
    parts = []
    offsets = _grid(high, high, high, high)
    for entries in zip(ra, rb, rc, rd):
        parts.append(
            ops.encode(*(entry + offset for entry, offset in zip(entries, offsets)))
        )
    return np.sort(np.concatenate(parts))


def psi_matrix_exponents(
    ring: RingSpec, ops: MatrixOps, x_code: int, codes: Codes
) -> np.ndarray:
    """Return exponents (mod p^ell) of psi(tr(x (g - I))) for g in codes."""
    products = ops.mul(np.int64(x_code), ops.minus_identity(codes))
    return psi_exponent(ring, ops.trace(products))


def _congruence_generators(ring: RingSpec, ops: MatrixOps, i: int) -> Codes:
    """Return I + pi^(i+k) E_jl, which generate K(i) when 2i >= ell."""
    gens = []
    for k in range(ring.ell - i):
        e = ring.p ** (i + k)
        gens += [
            ops.encode(ring.tables.add[1, e], 0, 0, 1),
            ops.encode(1, e, 0, 1),
            ops.encode(1, 0, e, 1),
            ops.encode(1, 0, 0, ring.tables.add[1, e]),
        ]
    return np.array([int(g) for g in gens], dtype=np.int64)


def check_inertia(G: GroupHandle, S: MatrixGroup, code: int, seed: int = 0) -> None:
    """Verify that S is the stabilizer of psi_A on K(ell2) under conjugation."""
    ring, ops = G.ring, G.ops
    kernel_gens = _congruence_generators(ring, ops, ring.ell2)
    base = psi_matrix_exponents(ring, ops, code, kernel_gens)

    def fixes(g: Codes) -> np.ndarray:
        conjugated = ops.conj(g[:, None], kernel_gens[None, :])
        return np.all(psi_matrix_exponents(ring, ops, code, conjugated) == base, axis=1)

    members = S.elements if G.order <= EXHAUSTIVE_CHECK_LIMIT else S.generators
    if not np.all(fixes(members)):
        raise NotASubgroup(S.name, "an element does not fix psi_A")
    if G.order <= EXHAUSTIVE_CHECK_LIMIT:
        candidates = G.elements
    else:
        candidates = G.random_elements(1000, seed)
    if not np.array_equal(fixes(candidates), S.contains(candidates)):
        raise NotASubgroup(S.name, "stabilizer of psi_A differs from the element list")


def _build_sa(G: GroupHandle, A: Any) -> Subgroup:
    ell1, code = _level_one_matrix(G, A)
    S = Subgroup(G, KIND_SA, inertia_elements(G, code), _label(G.ring, code))
    check_inertia(G, S, code)
    if ell1 and not is_scalar_mod(G.ops, code, 1):
        # S_A = C(A~) K(ell1)
        centralizer = centralizer_elements(G, code)
        kernel = congruence_elements(G.ring, G.ops, ell1)
        common = np.intersect1d(centralizer, kernel, assume_unique=True)
        if (
            not np.all(S.contains(centralizer))
            or not np.all(S.contains(kernel))
            or len(centralizer) * len(kernel) != S.order * len(common)
        ):
            raise NotASubgroup(S.name, "inertia group differs from C(A~) K(ell1)")
    return S


def _normal_shape(G: GroupHandle, code: int) -> int:
    """Return j for A = (alpha 1; pi^j beta alpha) over o_ell1, raising BadShape."""
    ring = G.ring
    m = ring.p**ring.ell1
    a, b, c, d = (int(v) % m for v in G.ops.decode(np.int64(code)))
    if (a - d) % m or b % m != 1 % m or c % ring.p:
        raise BadShape(
            str(Mat2.from_code(ring, code)), "(alpha 1; pi^j beta alpha) with j >= 1"
        )
    j = 1
    while j < ring.ell1 and c % ring.p ** (j + 1) == 0:
        j += 1
    return j


def n_elements(G: GroupHandle, code: int) -> Codes:
    """Return N = {(1 + pi^l1 x, pi^(l2 - j) z; pi^l2 y, 1 + pi^l1 w)}."""
    ring = G.ring
    ell1, ell2 = ring.ell1, ring.ell2
    j = _normal_shape(G, code)
    p, n = ring.p, ring.size

    def multiples(k: int) -> np.ndarray:
        return (np.arange(max(n // p**k, 1)) * p**k) % n

    x, z, y, w = _grid(
        multiples(ell1), multiples(ell2 - j), multiples(ell2), multiples(ell1)
    )
    one = ring.tables.add[1]
    return G.ops.encode(one[x], z, y, one[w])


def _check_normal_shape_ring(G: GroupHandle) -> None:
    if G.ring.ell1 < 1:
        raise BadParam("ell", G.ring.ell, "needs ell >= 2")


def _build_n(G: GroupHandle, A: Any) -> Subgroup:
    _check_normal_shape_ring(G)
    _, code = _level_one_matrix(G, A)
    return Subgroup(G, KIND_N, n_elements(G, code), _label(G.ring, code))


def _build_nca(G: GroupHandle, A: Any) -> Subgroup:
    _check_normal_shape_ring(G)
    _, code = _level_one_matrix(G, A)
    elements = product_set(G.ops, n_elements(G, code), centralizer_elements(G, code))
    return Subgroup(G, KIND_NCA, elements, _label(G.ring, code))


def _build_ua(G: GroupHandle, A: Any) -> Subgroup:
    ell1, code = _level_one_matrix(G, A)
    zu = _build_zu(G)
    ops = G.ops
    keep = ops.equal_mod(ops.mul(zu.elements, code), ops.mul(code, zu.elements), ell1)
    return Subgroup(G, KIND_UA, zu.elements[keep], _label(G.ring, code))


def _build_rx(G: GroupHandle, A: Any) -> Subgroup:
    ring, ops = G.ring, G.ops
    code = _matrix_code(ring, A)
    centralizer = centralizer_elements(G, code)
    identity_low = ops.equal_mod(centralizer, ops.identity, ring.ell1)
    elements = product_set(
        ops, centralizer[identity_low], congruence_elements(ring, ops, ring.ell2)
    )
    return Subgroup(G, KIND_RX, elements, _label(ring, code))


_BUILDERS: dict[str, Callable[..., Subgroup]] = {
    KIND_B: _build_b,
    KIND_U: _build_u,
    KIND_T: _build_t,
    KIND_Z: _build_z,
    KIND_ZT: _build_zt,
    KIND_ZU: _build_zu,
    KIND_ZTU: _build_ztu,
    KIND_P2: _build_p2,
    KIND_K: _build_k,
    KIND_CENTRALIZER: _build_centralizer,
    KIND_SA: _build_sa,
    KIND_N: _build_n,
    KIND_NCA: _build_nca,
    KIND_UA: _build_ua,
    KIND_RX: _build_rx,
}


def build_subgroup(G: GroupHandle, kind: str, **params: Any) -> Subgroup:
    """Build, verify and return the named subgroup of G."""
    if kind not in SUBGROUP_KINDS:
        raise BadParam("kind", kind, f"must be one of {', '.join(SUBGROUP_KINDS)}")
    builder = _BUILDERS[kind]
    try:
        inspect.signature(builder).bind(G, **params)
    except TypeError as error:
        raise BadParam(
            "params", params, f"wrong parameters for {kind}: {error}"
        ) from error
    subgroup = builder(G, **params)
    subgroup.check_closed()
    expected = order_formula(kind, G.ring, **subgroup.params)
    if expected is not None and expected != subgroup.order:
        raise NotASubgroup(
            subgroup.name,
            f"order {subgroup.order} differs from the formula value {expected}",
        )
    LOGGER.debug("Built %s of order %d", subgroup.name, subgroup.order)
    return subgroup


def intersection(first: Subgroup, second: MatrixGroup) -> Subgroup:
    """Return the intersection of two subgroups of the same group."""
    elements = np.intersect1d(first.elements, second.elements, assume_unique=True)
    of = {"of": f"{first.name}, {second.name}"}
    subgroup = Subgroup(first.parent, KIND_INTERSECTION, elements, of)
    subgroup.check_closed()
    return subgroup


def product(first: Subgroup, second: MatrixGroup) -> Subgroup:
    """Return first * second, which must be a subgroup."""
    elements = product_set(first.ops, first.elements, second.elements)
    of = {"of": f"{first.name}, {second.name}"}
    subgroup = Subgroup(first.parent, KIND_PRODUCT, elements, of)
    subgroup.check_closed()
    return subgroup
