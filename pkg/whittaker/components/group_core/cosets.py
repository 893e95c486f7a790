"""Left cosets gH and double cosets H1 g H2."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from whittaker.components.local_ring import units
from whittaker.exceptions import BudgetExceeded, NotASubgroup
from whittaker.helpers import log_duration

from .groups import GroupHandle, MatrixGroup
from .matrices import Codes, MatrixOps
from .subgroups import Subgroup

LOGGER = logging.getLogger(__name__)


class CosetSpace:
    """The left cosets of subgroup in ambient, with fixed representatives."""

    ambient: MatrixGroup
    subgroup: MatrixGroup
    reps: Codes
    identity_index: int
    ops: MatrixOps

    @property
    def count(self) -> int:
        """Return the index [ambient : subgroup]."""
        return len(self.reps)

    def locate(self, codes: Codes) -> tuple[np.ndarray, Codes]:
        """Return (coset index, rep^-1 g) for each g."""
        raise NotImplementedError


class BorelFamilyCosets(CosetSpace):
    """Closed-form cosets of H = {(x y; 0 x*u)} in GL2(o_ell).

    The canonical representative of gH has first column (1, c/a) or (a/c, 1), or the
    first column of g itself when X is trivial, and the remaining entry reduced
    modulo the group of admissible u.
    """

    def __init__(self, ambient: GroupHandle, subgroup: Subgroup) -> None:
        if subgroup.borel_family is None:
            raise NotASubgroup(subgroup.name, "not of upper triangular shape")
        self.ambient = ambient
        self.subgroup = subgroup
        self.trivial_x, self.t = subgroup.borel_family
        self.ring = ambient.ring
        self.ops = ambient.ops
        self.reps = self._enumerate()
        self.identity_index = int(np.searchsorted(self.reps, self.ops.identity))
        if self.count * subgroup.order != ambient.order:
            raise NotASubgroup(subgroup.name, "coset count does not match the index")

    def _canon(self, w: np.ndarray) -> np.ndarray:
        if self.t == 0:
            return np.ones_like(w)
        if self.t >= self.ring.ell:
            return w
        return w % self.ring.p**self.t

    def _canon_set(self) -> np.ndarray:
        return np.unique(self._canon(units(self.ring)))

    def _enumerate(self) -> Codes:
        ring, ops = self.ring, self.ops
        r = np.arange(ring.size)
        u = units(ring)
        m = r[r % ring.p == 0]
        w = self._canon_set()
        if self.trivial_x:
            a1, c1, w1 = (x.ravel() for x in np.meshgrid(u, r, w, indexing="ij"))
            a2, c2, w2 = (x.ravel() for x in np.meshgrid(m, u, w, indexing="ij"))
            first = ops.encode(a1, 0, c1, w1)
            second = ops.encode(a2, w2, c2, 0)
        else:
            c1, w1 = (x.ravel() for x in np.meshgrid(r, w, indexing="ij"))
            a2, w2 = (x.ravel() for x in np.meshgrid(m, w, indexing="ij"))
            first = ops.encode(1, 0, c1, w1)
            second = ops.encode(a2, w2, 1, 0)
        return np.sort(np.concatenate([first, second]))

    def representative(self, codes: Codes) -> Codes:
        """Return the canonical representative of gH."""
        tables = self.ring.tables
        mul, neg, inv = tables.mul, tables.neg, tables.inv
        a, _, c, _ = self.ops.decode(codes)
        det = self.ops.det(codes)
        unit = a % self.ring.p != 0
        a_inv = inv[np.where(unit, a, 1)]
        c_inv = inv[np.where(unit, 1, c)]
        if self.trivial_x:
            w_first = self._canon(mul[det, a_inv])
            w_second = self._canon(neg[mul[det, c_inv]])
            first = self.ops.encode(a, 0, c, w_first)
            second = self.ops.encode(a, w_second, c, 0)
        else:
            w_first = self._canon(mul[det, mul[a_inv, a_inv]])
            w_second = self._canon(neg[mul[det, mul[c_inv, c_inv]]])
            first = self.ops.encode(1, 0, mul[c, a_inv], w_first)
            second = self.ops.encode(mul[a, c_inv], w_second, 1, 0)
        return np.where(unit, first, second)

    def locate(self, codes: Codes) -> tuple[np.ndarray, Codes]:
        """Return (coset index, rep^-1 g) for each g."""
        codes = np.asarray(codes, dtype=np.int64)
        reps = self.representative(codes)
        idx = np.searchsorted(self.reps, reps)
        idx = np.minimum(idx, self.count - 1)
        if not np.all(self.reps[idx] == reps):
            reason = "representative outside the transversal"
            raise NotASubgroup(self.subgroup.name, reason)
        return idx, self.ops.mul(self.ops.inv(reps), codes)


class LabeledCosets(CosetSpace):
    """Cosets of a subgroup of a materialized group, found by labeling elements."""

    def __init__(self, ambient: MatrixGroup, subgroup: MatrixGroup) -> None:
        if ambient.order % subgroup.order:
            raise NotASubgroup(subgroup.name, f"order does not divide |{ambient.name}|")
        self.ambient = ambient
        self.subgroup = subgroup
        self.ops = ambient.ops
        elements = ambient.elements
        labels = np.full(ambient.order, -1, dtype=np.int64)
        reps: list[int] = []

        def label(position: int) -> None:
            members = ambient.index(self.ops.mul(elements[position], subgroup.elements))
            if np.any(members < 0):
                raise NotASubgroup(subgroup.name, f"not contained in {ambient.name}")
            labels[members] = len(reps)
            reps.append(int(elements[position]))

        label(int(ambient.index(np.int64(self.ops.identity))))
        for position in range(ambient.order):
            if labels[position] < 0:
                label(position)
        self.labels = labels
        self.reps = np.array(reps, dtype=np.int64)
        self.identity_index = 0
        if self.count * subgroup.order != ambient.order:
            reason = "cosets do not partition the ambient group"
            raise NotASubgroup(subgroup.name, reason)

    def locate(self, codes: Codes) -> tuple[np.ndarray, Codes]:
        """Return (coset index, rep^-1 g) for each g."""
        codes = np.asarray(codes, dtype=np.int64)
        positions = self.ambient.index(codes)
        if np.any(positions < 0):
            raise NotASubgroup(self.ambient.name, "element outside the ambient group")
        idx = self.labels[positions]
        return idx, self.ops.mul(self.ops.inv(self.reps[idx]), codes)


def coset_space(ambient: MatrixGroup, subgroup: MatrixGroup) -> CosetSpace:
    """Return the coset space of subgroup, closed-form when available."""
    if (
        isinstance(ambient, GroupHandle)
        and isinstance(subgroup, Subgroup)
        and subgroup.borel_family is not None
    ):
        return BorelFamilyCosets(ambient, subgroup)
    if not ambient.materialized:
        what = f"cosets of {subgroup.name}"
        raise BudgetExceeded(what, ambient.order, ambient.budget)
    return LabeledCosets(ambient, subgroup)


@dataclass
class DoubleCosetSet:
    """The double cosets left \\ ambient / right as left-orbits on ambient / right."""

    left: MatrixGroup
    right: MatrixGroup
    cosets: CosetSpace
    orbit_of: np.ndarray
    rep_cosets: np.ndarray

    @property
    def count(self) -> int:
        """Return the number of double cosets."""
        return len(self.rep_cosets)

    @property
    def reps(self) -> Codes:
        """Return one representative per double coset, the identity first."""
        return self.cosets.reps[self.rep_cosets]

    @cached_property
    def orbit_sizes(self) -> np.ndarray:
        """Return the number of right cosets in each double coset."""
        return np.bincount(self.orbit_of, minlength=self.count)

    @property
    def sizes(self) -> np.ndarray:
        """Return the double coset cardinalities."""
        return self.orbit_sizes * self.right.order

    def index_of(self, codes: Codes) -> np.ndarray:
        """Return the double coset index of each element."""
        return self.orbit_of[self.cosets.locate(codes)[0]]

    def members(self, index: int) -> np.ndarray:
        """Return the coset indices making up double coset index."""
        return np.flatnonzero(self.orbit_of == index)

    def stabilizer(self, index: int) -> tuple[Codes, Codes]:
        """Return (h, r^-1 h r) for h in left with h r right = r right."""
        rep = self.cosets.reps[self.rep_cosets[index]]
        h = self.left.elements
        idx, residual = self.cosets.locate(self.cosets.ops.mul(h, rep))
        keep = idx == self.rep_cosets[index]
        return h[keep], residual[keep]

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "left": self.left.name,
            "right": self.right.name,
            "count": self.count,
            "sizes": self.sizes.tolist(),
        }


def double_cosets(
    ambient: MatrixGroup,
    left: MatrixGroup,
    right: MatrixGroup,
    cosets: CosetSpace | None = None,
) -> DoubleCosetSet:
    """Return left \\ ambient / right as left-orbits on the cosets of right."""
    if cosets is None:
        cosets = coset_space(ambient, right)
    count = cosets.count
    with log_duration(LOGGER, f"Double cosets {left.name} \\ G / {right.name}"):
        rows, cols = [], []
        for generator in left.generators:
            image, _ = cosets.locate(cosets.ops.mul(generator, cosets.reps))
            rows.append(np.arange(count))
            cols.append(image)
        rows.append(np.arange(count))
        cols.append(np.arange(count))
        edges = (np.concatenate(rows), np.concatenate(cols))
        weights = np.ones(count * len(rows), dtype=np.int8)
        graph = csr_matrix((weights, edges), shape=(count, count))
        _, components = connected_components(graph, directed=True, connection="weak")

    first = np.full(components.max() + 1, count, dtype=np.int64)
    np.minimum.at(first, components, np.arange(count))
    first[components[cosets.identity_index]] = cosets.identity_index
    identity_component = components[cosets.identity_index]
    order = sorted(
        range(len(first)), key=lambda k: (k != identity_component, int(first[k]))
    )
    relabel = np.empty(len(first), dtype=np.int64)
    relabel[order] = np.arange(len(first))
    result = DoubleCosetSet(
        left=left,
        right=right,
        cosets=cosets,
        orbit_of=relabel[components],
        rep_cosets=first[order],
    )
    if int(result.sizes.sum()) != ambient.order:
        raise NotASubgroup(right.name, "double cosets do not partition the group")
    LOGGER.debug(
        "%s \\ %s / %s has %d double cosets",
        left.name,
        ambient.name,
        right.name,
        result.count,
    )
    return result


def delta_representatives(G: GroupHandle) -> Codes:
    """Return (1 0; pi^j z 1) for 1 <= j <= ell, z a unit, and (0 1; 1 0)."""
    ring = G.ring
    reps = [G.ops.encode(0, 1, 1, 0)]
    for j in range(1, ring.ell + 1):
        lower = G.ops.uniformizer_power(j, units(ring))
        reps.append(G.ops.encode(1, 0, np.unique(lower), 1))
    return np.unique(np.concatenate([np.atleast_1d(r) for r in reps]))


def check_delta_cover(G: GroupHandle, cosets: DoubleCosetSet) -> bool:
    """Return True if every B \\ G / ZU double coset meets the delta set."""
    hit = np.unique(cosets.index_of(delta_representatives(G)))
    return len(hit) == cosets.count


def check_same_double_coset(G: GroupHandle, cosets: DoubleCosetSet) -> bool:
    """Return True if two lower unipotent families share their double cosets.

    (1 0; pi^j z 1) and (1 0; pi^j z + pi^2j y 1) are compared for every j.
    """
    ring, ops = G.ring, G.ops
    r = np.arange(ring.size)
    for j in range(1, ring.ell + 1):
        z, y = (x.ravel() for x in np.meshgrid(units(ring), r, indexing="ij"))
        first = ops.encode(1, 0, ops.uniformizer_power(j, z), 1)
        shifted = ring.tables.add[
            ops.uniformizer_power(j, z), ops.uniformizer_power(2 * j, y)
        ]
        second = ops.encode(1, 0, shifted, 1)
        if not np.array_equal(cosets.index_of(first), cosets.index_of(second)):
            return False
    return True
