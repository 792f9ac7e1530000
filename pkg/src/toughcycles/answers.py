from enum import Enum


class Answer(str, Enum):
    """Three-valued outcome for searches that may run out of budget."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value
