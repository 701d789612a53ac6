"""Exact field scalars: arbitrary-precision rationals and prime residue fields.

A :class:`FieldSpec` names the field; a :class:`FieldElement` is one scalar in
canonical form (a reduced ``Fraction`` over the rationals, the least
nonnegative residue modulo ``p`` over a prime field).  All arithmetic is
exact; there is no floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ExhaustedFieldError, FieldMismatchError

_FIELD_TEXT_RE = re.compile(r"(Q|F([1-9][0-9]*))\Z")


class FieldKind(Enum):
    RATIONALS = "rationals"
    PRIME = "prime"


def _is_prime(n: int) -> bool:
    # Trial division; moduli in this toolkit stay small.
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Identifies a coefficient field: the rationals, or integers mod a prime.

    The textual form is ``Q`` for the rationals and ``F<p>`` (e.g. ``F5``) for
    a prime field; :meth:`from_text` parses it and ``str()`` produces it.
    """

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if self.modulus is None or not _is_prime(self.modulus):
                raise ValueError(f"modulus must be a prime, got {self.modulus!r}")
        elif self.modulus is not None:
            raise ValueError("the rational field takes no modulus")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        m = _FIELD_TEXT_RE.match(text.strip())
        if m is None:
            raise ValueError(f"unrecognized field {text!r}, expected Q or F<p>")
        if m.group(2) is None:
            return cls.rationals()
        return cls.prime(int(m.group(2)))

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        return f"F{self.modulus}"

    def element(self, value: "FieldElement | Fraction | int") -> "FieldElement":
        """Coerce an int, Fraction, or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatchError(
                    f"cannot coerce element of {value.spec} into {self}"
                )
            return value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot make a field element from {value!r}")
        if self.kind is FieldKind.RATIONALS:
            return FieldElement(self, Fraction(value))
        p = self.modulus
        if isinstance(value, int):
            return FieldElement(self, value % p)
        if value.denominator % p == 0:
            raise ZeroDivisionError(
                f"denominator {value.denominator} is not invertible mod {p}"
            )
        num = value.numerator % p
        den_inv = pow(value.denominator % p, -1, p)
        return FieldElement(self, (num * den_inv) % p)

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)


class FieldElement:
    """One scalar, tagged with its field.

    Supports ``+ - * /``, unary minus, ``**`` with nonnegative integer
    exponents, and mixes with plain ``int``/``Fraction`` operands (which are
    coerced).  Mixing scalars from different fields raises
    :class:`FieldMismatchError`.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value) -> None:
        self.spec = spec
        self.value = value

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.spec} and {other.spec}"
                )
            return other
        if isinstance(other, bool) or not isinstance(other, (int, Fraction)):
            return None
        return self.spec.element(other)

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.spec.element(self.value + rhs.value)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.spec.element(self.value - rhs.value)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.spec.element(rhs.value - self.value)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.spec.element(self.value * rhs.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inv()

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inv()

    def __neg__(self) -> "FieldElement":
        return self.spec.element(-self.value)

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {exponent!r}")
        if self.spec.kind is FieldKind.PRIME:
            return FieldElement(self.spec, pow(self.value, exponent, self.spec.modulus))
        return FieldElement(self.spec, self.value**exponent)

    def inv(self) -> "FieldElement":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero:
            raise ZeroDivisionError(f"inverse of zero in {self.spec}")
        if self.spec.kind is FieldKind.PRIME:
            return FieldElement(self.spec, pow(self.value, -1, self.spec.modulus))
        return FieldElement(self.spec, 1 / self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.spec}, {self.value})"


def enumerate_nonzero(spec: FieldSpec, index: int) -> FieldElement:
    """Return the index-th element of a fixed stream of distinct nonzero scalars.

    Over the rationals the stream is 1, 2, 3, ...; over F_p it is 1, ..., p-1
    and asking for index >= p-1 raises :class:`ExhaustedFieldError`.
    """
    if not isinstance(index, int) or index < 0:
        raise ValueError(f"index must be a nonnegative int, got {index!r}")
    if spec.kind is FieldKind.PRIME and index >= spec.modulus - 1:
        raise ExhaustedFieldError(
            f"{spec} has only {spec.modulus - 1} nonzero elements, index {index} is out of range"
        )
    return spec.element(index + 1)
