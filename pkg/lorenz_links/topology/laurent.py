# CHECKPOINT_5_LAURENT
"""
Laurent Polynomials
===================
Exact integer Laurent polynomials in one formal variable.

Terms are stored as exponent → nonzero coefficient. The variable name is
only used for display; ``A^2`` and ``t^2`` compare equal.
"""

from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

from lorenz_links.topology.errors import InvariantError, LinkInputError

SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Immutable element of Z[x, x^{-1}]"""

    __slots__ = ("_terms", "variable")

    def __init__(self, terms: Optional[Mapping[int, int]] = None, variable: str = "t"):
        self._terms: Dict[int, int] = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.variable = variable

    # ============================================
    # Constructors
    # ============================================

    @classmethod
    def constant(cls, c: int, variable: str = "t") -> "LaurentPoly":
        return cls({0: c}, variable)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, variable: str = "t") -> "LaurentPoly":
        return cls({exponent: coefficient}, variable)

    @classmethod
    def from_coeffs(cls, min_deg: int, coeffs: Iterable[int], variable: str = "t") -> "LaurentPoly":
        return cls({min_deg + i: c for i, c in enumerate(coeffs)}, variable)

    @classmethod
    def from_json(cls, data: Mapping, variable: str = "t") -> "LaurentPoly":
        return cls.from_coeffs(int(data["min_deg"]), data["coeffs"], variable)

    # ============================================
    # Accessors
    # ============================================

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    @property
    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """(exponent, coefficient) pairs in increasing exponent order"""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def exponents(self) -> List[int]:
        return sorted(self._terms)

    # ============================================
    # Arithmetic
    # ============================================

    def _coerce(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variable)
        return NotImplemented

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms, self.variable)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.variable)

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms, self.variable)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise LinkInputError("only ±x^m can be raised to a negative power")
            (e, c), = self._terms.items()
            return LaurentPoly({e * exponent: c ** abs(exponent)}, self.variable)
        result = LaurentPoly.constant(1, self.variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by x^m"""
        return LaurentPoly({e + m: c for e, c in self._terms.items()}, self.variable)

    def map_exponents(self, fn: Callable[[int], int], variable: Optional[str] = None) -> "LaurentPoly":
        """Substitute x^e ↦ y^{fn(e)}; fn must be injective on the exponents"""
        terms = {fn(e): c for e, c in self._terms.items()}
        if len(terms) != len(self._terms):
            raise InvariantError("exponent substitution merged terms")
        return LaurentPoly(terms, variable or self.variable)

    # ============================================
    # Division
    # ============================================

    def _long_divide(self, other: "LaurentPoly", exact: bool) -> Tuple["LaurentPoly", "LaurentPoly"]:
        """
        Divide after shifting both operands to polynomials with nonzero
        constant term, working down from the top coefficient.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            zero = LaurentPoly({}, self.variable)
            return zero, zero

        low = self.min_degree
        remainder = dict(self.shift(-low)._terms)
        divisor = other.shift(-other.min_degree)._terms
        top = max(divisor)
        lead = divisor[top]
        quotient: Dict[int, int] = {}

        while remainder and max(remainder) >= top:
            degree = max(remainder)
            c, r = divmod(remainder[degree], lead)
            if r:
                if exact:
                    raise InvariantError(f"{self} is not divisible by {other} over the integers")
                raise LinkInputError(f"divmod needs a divisor with leading coefficient ±1, got {lead}")
            step = degree - top
            quotient[step] = c
            for e, d in divisor.items():
                value = remainder.get(e + step, 0) - c * d
                if value:
                    remainder[e + step] = value
                else:
                    remainder.pop(e + step, None)

        q = LaurentPoly(quotient, self.variable).shift(low - other.min_degree)
        return q, LaurentPoly(remainder, self.variable).shift(low)

    def exact_div(self, other: Scalar) -> "LaurentPoly":
        """Quotient q with self = q · other; InvariantError if there is none"""
        other = self._coerce(other)
        q, r = self._long_divide(other, exact=True)
        if not r.is_zero:
            raise InvariantError(f"{self} is not divisible by {other}: remainder {r}")
        return q

    def __divmod__(self, other: Scalar) -> Tuple["LaurentPoly", "LaurentPoly"]:
        other = self._coerce(other)
        return self._long_divide(other, exact=False)

    # ============================================
    # Normal Forms
    # ============================================

    def canonical(self) -> "LaurentPoly":
        """Shift the lowest exponent to 0 and make its coefficient positive"""
        if self.is_zero:
            return self
        p = self.shift(-self.min_degree)
        return -p if p.coefficient(0) < 0 else p

    def to_json(self) -> Dict[str, object]:
        if self.is_zero:
            return {"min_deg": 0, "coeffs": []}
        low, high = self.min_degree, self.max_degree
        return {"min_deg": low, "coeffs": [self.coefficient(e) for e in range(low, high + 1)]}

    # ============================================
    # Comparison and Display
    # ============================================

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                power = self.variable if e == 1 else self.variable + str(e).translate(SUPERSCRIPTS)
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.terms)!r}, variable={self.variable!r})"
