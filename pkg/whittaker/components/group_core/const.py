"""Group core constants."""
from typing import Final

COMPONENT = "group_core"

# CONFIG_SCHEMA constants
CONFIG_BUDGET_ELEMENTS = "budget_elements"

DESC_COMPONENT = "Enumeration of GL2(o_ell) and its subgroups."
DESC_BUDGET_ELEMENTS = (
    "Largest group that is stored element by element. Larger groups are iterated "
    "block by block over the cosets of the first congruence subgroup."
)

KIND_B = "B"
KIND_U = "U"
KIND_T = "T"
KIND_Z = "Z"
KIND_ZT = "Zt"
KIND_ZU = "ZU"
KIND_ZTU = "ZtU"
KIND_P2 = "P2"
KIND_K = "K"
KIND_CENTRALIZER = "centralizer"
KIND_SA = "S_A"
KIND_N = "N"
KIND_NCA = "NC_A"
KIND_UA = "U_A"
KIND_RX = "R_x"
KIND_PRODUCT = "product"
KIND_INTERSECTION = "intersection"

SUBGROUP_KINDS: Final = (
    KIND_B,
    KIND_U,
    KIND_T,
    KIND_Z,
    KIND_ZT,
    KIND_ZU,
    KIND_ZTU,
    KIND_P2,
    KIND_K,
    KIND_CENTRALIZER,
    KIND_SA,
    KIND_N,
    KIND_NCA,
    KIND_UA,
    KIND_RX,
)

# Largest number of products formed in one vectorized step
CHUNK_SIZE: Final = 1 << 22
