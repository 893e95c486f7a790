"""Characters constants."""
from typing import Final

VARIANT_PSI_T = "PsiT"
VARIANT_PSI_X = "PsiX"
VARIANT_CHI_Z = "ChiZ"
VARIANT_CHI_UNITS = "ChiUnits"
VARIANT_TENSOR_ZU = "TensorZU"
VARIANT_TRIPLE_ZTU = "TripleZtU"
VARIANT_MU_ALPHA = "MuAlpha"
VARIANT_PSI_A_PRIME = "PsiAPrime"
VARIANT_PSI_A_DOUBLE_PRIME = "PsiADoublePrime"
VARIANT_BOREL_PAIR = "BorelPair"
VARIANT_NAMED_EXTENSION = "NamedExtension"

VARIANTS: Final = (
    VARIANT_PSI_T,
    VARIANT_PSI_X,
    VARIANT_CHI_Z,
    VARIANT_CHI_UNITS,
    VARIANT_TENSOR_ZU,
    VARIANT_TRIPLE_ZTU,
    VARIANT_MU_ALPHA,
    VARIANT_PSI_A_PRIME,
    VARIANT_PSI_A_DOUBLE_PRIME,
    VARIANT_BOREL_PAIR,
    VARIANT_NAMED_EXTENSION,
)

