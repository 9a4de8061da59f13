"""
Enumerations selecting computation methods and output styles.
"""
import enum


class BettiMethod(str, enum.Enum):
    """Independent ways of computing Betti numbers."""
    DESCENTS = "descents"
    RECURSION = "recursion"
    CODES = "codes"
    FAN = "fan"


class CharSource(str, enum.Enum):
    """Source of a characteristic series."""
    RECURSION = "recursion"
    CODES = "codes"


class GraphKind(str, enum.Enum):
    """Graph families with closed-form characteristic series."""
    LOLLIPOP = "lollipop"
    PATH = "path"
    COMPLETE = "complete"


class OutputFormat(str, enum.Enum):
    """Emitted document format."""
    JSON = "json"
    TABLE = "table"
