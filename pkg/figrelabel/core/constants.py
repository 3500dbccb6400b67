"""
Constants
"""

ENV_PREFIX = "FIGRELABEL_"
CONFIG_ENV_VAR = "FIGRELABEL_CONFIG"

# VM limits
DEFAULT_MAX_STEPS = 10_000_000
INTEGER_TOLERANCE = 1e-9
# integer operands, unsigned radix literals included
INTEGER_LIMIT = 2 ** 32
MAX_SHIFT = 32
# Level-1 array and string length limit
MAX_COMPOSITE_SIZE = 65535
SINGULAR_DETERMINANT = 1e-12

# Spec defaults
DEFAULT_FONT_NAME = "Helvetica"
DEFAULT_FONT_SIZE_BP = 10.0

# Output formatting
COORDINATE_DECIMALS = 6
LISTING_FORMATS = ("tsv", "json")
TSV_HEADER = "seq\tx\ty\ttext"

# Name of the private dictionary written into relabeled figures
PRIVATE_DICT_NAME = "FigRelabelDict"

# CLI exit statuses
EXIT_OK = 0
EXIT_UNMATCHED = 1
EXIT_PARSE_ERROR = 2
EXIT_IO_ERROR = 3
