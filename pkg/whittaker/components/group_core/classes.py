"""Conjugacy classes, power maps and element orders of a materialized group."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from math import lcm

import numpy as np

from whittaker.helpers import log_duration

from .groups import MatrixGroup
from .matrices import Codes

LOGGER = logging.getLogger(__name__)


@dataclass
class ConjugacyClasses:
    """Classes of a group; class 0 is the class of the identity."""

    group: MatrixGroup
    class_of: np.ndarray
    reps: Codes

    @property
    def count(self) -> int:
        """Return the number of classes."""
        return len(self.reps)

    @cached_property
    def sizes(self) -> np.ndarray:
        """Return the class sizes."""
        return np.bincount(self.class_of, minlength=self.count)

    def classify(self, codes: Codes) -> np.ndarray:
        """Return the class index of each element."""
        positions = self.group.index(codes)
        return np.where(positions >= 0, self.class_of[positions], -1)

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Return the order of each class representative."""
        ops = self.group.ops
        orders = np.zeros(self.count, dtype=np.int64)
        current = self.reps.copy()
        k = 1
        while np.any(orders == 0):
            done = (current == ops.identity) & (orders == 0)
            orders[done] = k
            current = ops.mul(current, self.reps)
            k += 1
        return orders

    @property
    def exponent(self) -> int:
        """Return the exponent of the group."""
        return lcm(*(int(o) for o in self.element_orders))

    @cached_property
    def inverse_class(self) -> np.ndarray:
        """Return inv[c] = class of rep(c)^-1."""
        return self.classify(self.group.ops.inv(self.reps))

    def power_map(self, length: int) -> np.ndarray:
        """Return pm[c, j] = class of rep(c)^j for 0 <= j < length."""
        ops = self.group.ops
        result = np.empty((self.count, length), dtype=np.int64)
        current = np.full(self.count, ops.identity, dtype=np.int64)
        for j in range(length):
            result[:, j] = self.classify(current)
            current = ops.mul(current, self.reps)
        return result

    def as_dict(self) -> dict:
        """Return a serializable summary."""
        return {
            "group": self.group.name,
            "count": self.count,
            "sizes": self.sizes.tolist(),
        }


def conjugacy_classes(group: MatrixGroup) -> ConjugacyClasses:
    """Return the conjugacy classes of a materialized group."""
    ops = group.ops
    elements = group.elements
    generators = group.generators
    class_of = np.full(group.order, -1, dtype=np.int64)
    reps: list[int] = []
    with log_duration(LOGGER, f"Conjugacy classes of {group.name}"):
        order = [int(group.index(np.int64(ops.identity)))]
        order += list(range(group.order))
        for start in order:
            if class_of[start] >= 0:
                continue
            k = len(reps)
            reps.append(int(elements[start]))
            class_of[start] = k
            frontier = elements[[start]]
            while len(frontier):
                images = ops.conj(generators[:, None], frontier[None, :]).ravel()
                positions = np.unique(group.index(images))
                positions = positions[class_of[positions] < 0]
                class_of[positions] = k
                frontier = elements[positions]
    LOGGER.debug("%s has %d conjugacy classes", group.name, len(reps))
    return ConjugacyClasses(group, class_of, np.array(reps, dtype=np.int64))
