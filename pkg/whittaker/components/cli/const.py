"""Command line constants."""
from typing import Final

COMPONENT = "report"

# CONFIG_SCHEMA constants
CONFIG_FORMAT = "format"

FORMAT_JSON = "json"
FORMAT_MD = "md"
FORMATS: Final = (FORMAT_JSON, FORMAT_MD)
DEFAULT_FORMAT: Final = FORMAT_JSON

DESC_COMPONENT = "Report emission."
DESC_FORMAT = "Output format of the report, <code>json</code> or <code>md</code>."

VERB_RING_INFO = "ring-info"
VERB_TABLE1 = "table1"
VERB_CONSTRUCT_SS = "construct-ss"
VERB_CONSTRUCT_SNS = "construct-sns"
VERB_HOM = "hom"
VERB_DGG_HOM = "dgg-hom"
VERB_DGG = "dgg"
VERB_ENDO = "endo"
VERB_A_BOUND = "a-bound"
VERB_SNS_TABLE = "sns-table"
VERB_STRONG_GELFAND = "strong-gelfand"
VERB_W_CHECK = "w-check"
VERB_GG_FREE = "gg-free"
VERB_COR16 = "cor16"
VERB_CHECK = "check"

PAPER_MATCH = "paper_match"
PAPER_MATCH_NA = "n/a"

# the a(t, ell) sweep runs every level from 2 up to this one unless --max-ell is given
DEFAULT_SWEEP_MAX_ELL: Final = 4
