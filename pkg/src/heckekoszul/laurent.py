"""Laurent polynomials in one variable ``v`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality is equality of the term
    maps. Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for k, c in items:
            c = clean.get(k, 0) + int(c)
            if c:
                clean[int(k)] = c
            else:
                clean.pop(int(k), None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({k: c} if c else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for +-v^k, the units of Z[v, v^-1]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def degree(self) -> int:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int:
        return min(self._terms) if self._terms else None

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[v, v^-1]")
        (k, c), = self._terms.items()
        return LaurentPoly._raw({-k: c})

    def substitute_neg_v(self) -> "LaurentPoly":
        """The ring involution v -> -v."""
        return LaurentPoly._raw({k: (-c if k % 2 else c) for k, c in self._terms.items()})

    def __call__(self, value):
        return sum(c * value**k for k, c in self._terms.items())

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                var = "v" if k == 1 else f"v^{k}"
                body = var if a == 1 else f"{a}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def substitute_neg_v(a: LaurentPoly) -> LaurentPoly:
    return a.substitute_neg_v()


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
