"""Local ring constants."""
from typing import Final

COMPONENT = "ring"

# CONFIG_SCHEMA constants
CONFIG_P = "p"
CONFIG_ELL = "ell"
CONFIG_FLAVOR = "flavor"

DEFAULT_P: Final = 3
DEFAULT_ELL: Final = 2
DEFAULT_FLAVOR: Final = "zmod"

DESC_COMPONENT = "Finite local ring the group is built over."
DESC_P = "Odd prime, the size of the residue field."
DESC_ELL = "Length of the ring, o_ell = Z/p^ell or F_p[t]/t^ell."
DESC_FLAVOR = (
    "<code>zmod</code> for the integers modulo p^ell, "
    "<code>tpoly</code> for truncated polynomials over F_p."
)

OP_ADD = "add"
OP_SUB = "sub"
OP_MUL = "mul"
OP_INV = "inv"
OP_NEG = "neg"
OPS: Final = (OP_ADD, OP_SUB, OP_MUL, OP_INV, OP_NEG)

# Largest ring the dense arithmetic tables are built for
MAX_TABLE_SIZE: Final = 1024
