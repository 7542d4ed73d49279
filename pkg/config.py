"""
Configuration settings for the Hopf image toolkit.
Non-sensitive defaults only - per-run values come from the command line.
"""

# Field Settings
DEFAULT_CONDUCTOR = 12  # lcm(3, 4, 6): covers the q-roots used by the A(k, e) examples
MAX_CONDUCTOR = 120
ROOT_ORDER_SEARCH_FACTOR = 2  # root_of_unity_order searches n <= factor * N
SCALAR_SYMBOL = "z"

# Engine Settings
VERIFY_CLOSURE_POSTCONDITIONS = True  # re-check I_pi is a Hopf ideal inside Ker(pi)
MAX_CLOSURE_ROUNDS = 10000  # hard stop; the fixpoint needs at most dim(H) rounds

# Group-like search
GROUPLIKE_SEARCH_RATIONAL_ROOTS = True

# Tannaka checks
DEFAULT_MAX_WORD_LENGTH = 3
WORD_ALPHABET = "ab"
SELF_DUAL_ALPHABET = "a"

# Output Settings
OUTPUT_MODE = "text"  # "text" or "json"
REPORT_ENCODING = "utf-8"
JSON_INDENT = 2

# Exit Codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT_ERROR = 2
EXIT_NEGATIVE = 3

# Logging
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_FILE = "logs/hopfimage.log"
LOG_MAX_BYTES = 10 * 1024 * 1024  # 10MB
LOG_BACKUP_COUNT = 5
LOG_TO_FILE = False
