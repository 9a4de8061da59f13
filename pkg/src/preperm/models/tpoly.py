"""
Integer polynomials in the grading variable t.
"""
from typing import Iterable, List, Tuple, Union

from sympy import Poly, Symbol, ZZ

t = Symbol("t")


class TPoly:
    """Univariate polynomial in t with integer coefficients."""

    __slots__ = ("_poly",)

    def __init__(self, coefficients: Union[Iterable[int], Poly] = ()):
        if isinstance(coefficients, Poly):
            self._poly = coefficients
        else:
            coeffs = [int(c) for c in coefficients]
            self._poly = Poly.from_list(list(reversed(coeffs)) or [0], t, domain=ZZ)

    @classmethod
    def zero(cls) -> "TPoly":
        return cls()

    @classmethod
    def one(cls) -> "TPoly":
        return cls([1])

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "TPoly":
        """coefficient * t^degree."""
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls([0] * degree + [coefficient])

    @property
    def poly(self) -> Poly:
        return self._poly

    @property
    def coefficients(self) -> List[int]:
        """Coefficients c_0, c_1, ... with no trailing zeros."""
        coeffs = [int(c) for c in reversed(self._poly.all_coeffs())]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def is_palindromic(self) -> bool:
        coeffs = self.coefficients
        return coeffs == coeffs[::-1]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def at(self, value: int) -> int:
        """Evaluate at an integer."""
        return int(self._poly.eval(value))

    def shift(self, degree: int) -> "TPoly":
        """Multiply by t^degree."""
        return self * TPoly.monomial(degree)

    def _coerce(self, other) -> Poly:
        if isinstance(other, TPoly):
            return other._poly
        if isinstance(other, int):
            return Poly.from_list([other], t, domain=ZZ)
        return NotImplemented

    def __add__(self, other) -> "TPoly":
        poly = self._coerce(other)
        if poly is NotImplemented:
            return NotImplemented
        return TPoly(self._poly + poly)

    __radd__ = __add__

    def __sub__(self, other) -> "TPoly":
        poly = self._coerce(other)
        if poly is NotImplemented:
            return NotImplemented
        return TPoly(self._poly - poly)

    def __rsub__(self, other) -> "TPoly":
        return (-self) + other

    def __neg__(self) -> "TPoly":
        return TPoly(-self._poly)

    def __mul__(self, other) -> "TPoly":
        poly = self._coerce(other)
        if poly is NotImplemented:
            return NotImplemented
        return TPoly(self._poly * poly)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (list, tuple)):
            return self.coefficients == list(other)
        poly = self._coerce(other)
        if poly is NotImplemented:
            return NotImplemented
        return self.coefficients == TPoly(poly).coefficients

    def __hash__(self) -> int:
        return hash(tuple(self.coefficients))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __iter__(self):
        return iter(self.coefficients)

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.coefficients)

    def __repr__(self) -> str:
        return f"TPoly({self.coefficients})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return str(self._poly.as_expr())
