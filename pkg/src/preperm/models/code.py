"""
Admissible codes and their geometric component descriptors.
"""
from collections import Counter
from typing import Dict, FrozenSet, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


def admissibility_error(a: Tuple[int, ...]) -> Optional[str]:
    """Reason the sequence is not admissible, or None."""
    if any(x < 0 for x in a):
        return "entries must be non-negative"
    if not a:
        return "code must be non-empty"
    counts = Counter(a)
    top = max(a)
    for value in range(1, top + 1):
        if counts[value] == 0:
            return f"value {value} is skipped"
    return None


class Code(BaseModel):
    """
    Admissible sequence a with its marking function f.

    marks[j-1] = f(j) for j = 1..max(a); f(j) counts how many occurrences of
    j precede the marked one, so 1 <= f(j) <= m_j - 1.
    """

    model_config = ConfigDict(frozen=True)

    a: Tuple[int, ...]
    marks: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def validate_code(self) -> "Code":
        reason = admissibility_error(self.a)
        if reason:
            raise ValueError(f"inadmissible sequence {list(self.a)}: {reason}")
        if len(self.marks) != self.max_value:
            raise ValueError(
                f"marking needs {self.max_value} values, got {len(self.marks)}"
            )
        for value, mark in enumerate(self.marks, start=1):
            if not 1 <= mark <= self.multiplicity(value) - 1:
                raise ValueError(
                    f"f({value}) = {mark} outside [1, {self.multiplicity(value) - 1}]"
                )
        return self

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def max_value(self) -> int:
        return max(self.a)

    def multiplicity(self, value: int) -> int:
        return self.a.count(value)

    @property
    def mu(self) -> int:
        """Multiplicity of the maximal value."""
        return self.multiplicity(self.max_value)

    @property
    def index(self) -> int:
        """ind(c) = Σ f(j)."""
        return sum(self.marks)

    @property
    def f(self) -> Dict[int, int]:
        return {value: mark for value, mark in enumerate(self.marks, start=1)}

    def multiplicities(self) -> Tuple[int, ...]:
        """(m_0, ..., m_max)."""
        return tuple(self.multiplicity(v) for v in range(self.max_value + 1))

    def marked_positions(self) -> FrozenSet[int]:
        """0-based positions carrying a hat."""
        positions = set()
        for value, mark in enumerate(self.marks, start=1):
            occurrences = [i for i, x in enumerate(self.a) if x == value]
            positions.add(occurrences[mark])
        return frozenset(positions)


class Component(BaseModel):
    """
    Geometric description of a code.

    The base case is a point (the code has a single value level); otherwise
    the component is indexed by j = n - μ, the subset α of positions below
    the maximum, the shift i = f(max) and the component of the reduced code.
    """

    model_config = ConfigDict(frozen=True)

    degree: int
    j: Optional[int] = None
    alpha: Optional[FrozenSet[int]] = None
    shift: Optional[int] = None
    inner: Optional["Component"] = None

    @property
    def is_base(self) -> bool:
        return self.j is None


Component.model_rebuild()
