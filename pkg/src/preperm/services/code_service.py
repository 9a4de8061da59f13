"""
Code service: enumeration, reduction, decoding and the S_n action on codes.
"""
import re
from collections import Counter, defaultdict
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Dict, List, Optional, Sequence, Tuple

from preperm.models.code import Code, Component, admissibility_error
from preperm.schemas.code import OrbitDatum, StageRow, StageTable
from preperm.utils.logger import logger

_HAT = "̂"


@lru_cache(maxsize=None)
def _all_codes(n: int) -> Tuple[Code, ...]:
    codes = []
    # marked values occur at least twice, so max(a) <= n // 2
    for a in product(range(n // 2 + 1), repeat=n):
        if admissibility_error(a):
            continue
        counts = Counter(a)
        ranges = [range(1, counts[v]) for v in range(1, max(a) + 1)]
        for marks in product(*ranges):
            codes.append(Code(a=a, marks=marks))
    logger.debug(f"enumerated {len(codes)} codes of length {n}")
    return tuple(codes)


class CodeService:
    """Code service class."""

    @staticmethod
    def is_admissible(a: Sequence[int]) -> bool:
        """Positive values form {1, ..., max(a)} or there are none."""
        return admissibility_error(tuple(a)) is None

    @staticmethod
    def enumerate_codes(n: int, min_mu: int) -> List[Code]:
        """Every code of length n with μ >= min_mu."""
        if n < 1:
            raise ValueError("codes need n >= 1")
        if not 1 <= min_mu <= n:
            raise ValueError(f"min_mu must lie in [1, {n}], got {min_mu}")
        return [code for code in _all_codes(n) if code.mu >= min_mu]

    @staticmethod
    def reduce(code: Code) -> Optional[Code]:
        """Delete every occurrence of the maximum; None when nothing remains."""
        if code.mu == code.n:
            return None
        top = code.max_value
        return Code(a=tuple(x for x in code.a if x < top), marks=code.marks[:-1])

    @staticmethod
    def decode(code: Code) -> Component:
        """Blowup component indexed by the code, of degree 2·ind."""
        degree = 2 * code.index
        if code.mu == code.n:
            return Component(degree=degree)
        top = code.max_value
        return Component(
            degree=degree,
            j=code.n - code.mu,
            alpha=frozenset(i + 1 for i, x in enumerate(code.a) if x < top),
            shift=code.marks[-1],
            inner=CodeService.decode(CodeService.reduce(code)),
        )

    @staticmethod
    def act(w: Sequence[int], code: Code) -> Code:
        """(w·a)_{w(j)} = a_j; the marking map is unchanged."""
        if sorted(w) != list(range(1, code.n + 1)):
            raise ValueError(f"{list(w)} is not a permutation of [{code.n}]")
        permuted = [0] * code.n
        for j, value in enumerate(code.a):
            permuted[w[j] - 1] = value
        return Code(a=tuple(permuted), marks=code.marks)

    @staticmethod
    def representative(code: Code) -> Code:
        """Orbit representative with the entries sorted increasingly."""
        return Code(a=tuple(sorted(code.a)), marks=code.marks)

    @staticmethod
    def stabilizer_type(code: Code) -> Tuple[int, ...]:
        """Sizes of the value classes, sorted descending."""
        return tuple(sorted((m for m in code.multiplicities() if m), reverse=True))

    @staticmethod
    def orbit_size(code: Code) -> int:
        return factorial(code.n) // prod(factorial(m) for m in code.multiplicities())

    @staticmethod
    def orbits(n: int, min_mu: int) -> List[OrbitDatum]:
        """Orbit decomposition of the codes with μ >= min_mu."""
        members: Dict[Code, int] = defaultdict(int)
        for code in CodeService.enumerate_codes(n, min_mu):
            members[CodeService.representative(code)] += 1

        orbits = []
        for representative, count in members.items():
            size = CodeService.orbit_size(representative)
            if size != count:
                raise ValueError(
                    f"orbit of {CodeService.format_marked(representative)} has "
                    f"{count} members, expected {size}"
                )
            orbits.append(
                OrbitDatum(
                    representative=representative,
                    orbit_size=size,
                    stabilizer_type=list(CodeService.stabilizer_type(representative)),
                )
            )
        orbits.sort(key=lambda o: (o.representative.index, o.representative.a, o.representative.marks))
        return orbits

    @staticmethod
    def parse_marked(text: str) -> Code:
        """Parse '1 2 0 1 2^ 1^ 2'; a trailing ^ (or a combining hat) marks an occurrence."""
        pattern = r"(\d+)(\^|" + _HAT + r")?" if re.search(r"\s", text.strip()) else r"(\d)(\^|" + _HAT + r")?"
        tokens = re.findall(pattern, text)
        if not tokens or "".join(v + h for v, h in tokens) != re.sub(r"\s+", "", text):
            raise ValueError(f"malformed marked sequence: {text!r}")

        a = tuple(int(value) for value, _ in tokens)
        hats = [bool(hat) for _, hat in tokens]
        reason = admissibility_error(a)
        if reason:
            raise ValueError(f"inadmissible sequence {list(a)}: {reason}")

        marks = []
        for value in range(1, max(a) + 1):
            occurrences = [i for i, x in enumerate(a) if x == value]
            ranks = [rank for rank, i in enumerate(occurrences) if hats[i]]
            if len(ranks) != 1:
                raise ValueError(f"value {value} needs exactly one marked occurrence")
            marks.append(ranks[0])
        if any(hat and value == 0 for hat, value in zip(hats, a)):
            raise ValueError("zeros cannot be marked")
        return Code(a=a, marks=tuple(marks))

    @staticmethod
    def format_marked(code: Code, unicode: bool = False) -> str:
        """Space separated entries with the marked occurrences hatted."""
        marked = code.marked_positions()
        hat = _HAT if unicode else "^"
        return " ".join(
            f"{value}{hat if i in marked else ''}" for i, value in enumerate(code.a)
        )

    @staticmethod
    def stage_table(n: int) -> StageTable:
        """Orbit representatives by degree 2·ind and by the stage n-μ adding them."""
        grouped: Dict[Tuple[int, int], List[str]] = defaultdict(list)
        for orbit in CodeService.orbits(n, 1):
            code = orbit.representative
            grouped[(2 * code.index, n - code.mu)].append(CodeService.format_marked(code))
        rows = [
            StageRow(degree=degree, stage=stage, representatives=representatives)
            for (degree, stage), representatives in sorted(grouped.items())
        ]
        return StageTable(n=n, rows=rows)
