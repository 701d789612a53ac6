"""Sparse multivariate polynomials over an exact coefficient field.

A :class:`Polynomial` is a dict from exponent vectors to nonzero field
scalars, tagged with its :class:`RingSpec`.  Values are immutable by
convention: every operation returns a new polynomial and normalizes away
zero coefficients, so equal polynomials always have equal term dicts.

Degrees follow the convention that the zero polynomial has no degree:
``total_degree`` and ``degree_in`` return ``None`` for it and an ``int``
for everything else.

The canonical text form (``str()``) lists terms in graded lexicographic
order, highest first: larger total degree precedes smaller, and within one
degree the vector with the larger leading exponent precedes.  It is exactly
the form the companion parser reads back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterator, Mapping, Sequence

from .errors import NotHomogeneousError, RingMismatchError, ZeroPolynomialError
from .field import FieldElement, FieldKind, FieldSpec

_VAR_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring: a coefficient field plus ordered variable names.

    Variable names match ``[A-Za-z][A-Za-z0-9]*`` and are distinct; the
    default names are t1..tn.  Variables are addressed 1-based throughout
    the public API (variable j is ``variables[j - 1]``).
    """

    field: FieldSpec
    variables: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        for name in self.variables:
            if not _VAR_NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")

    @classmethod
    def default(cls, field: FieldSpec, nvars: int) -> "RingSpec":
        if nvars < 1:
            raise ValueError("need at least one variable")
        return cls(field, tuple(f"t{j}" for j in range(1, nvars + 1)))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index_of(self, name: str) -> int:
        """1-based index of a variable name; raises KeyError if unknown."""
        try:
            return self.variables.index(name) + 1
        except ValueError:
            raise KeyError(name) from None

    def subring(self, m: int) -> "RingSpec":
        """The ring on the first m variables."""
        if not 1 <= m <= self.nvars:
            raise ValueError(f"subring size must be in 1..{self.nvars}, got {m}")
        return RingSpec(self.field, self.variables[:m])

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = self.field.element(value)
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, j: int) -> "Polynomial":
        """The variable t_j as a polynomial (j is 1-based)."""
        if not 1 <= j <= self.nvars:
            raise ValueError(f"variable index must be in 1..{self.nvars}, got {j}")
        exps = tuple(1 if i == j - 1 else 0 for i in range(self.nvars))
        return Polynomial(self, {exps: self.field.one()})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(j) for j in range(1, self.nvars + 1))

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.variables)}]"


def _order_key(exps: tuple[int, ...]) -> tuple:
    # Graded lex, for descending sort: negate so bigger sorts first.
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    """A sparse polynomial; ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("ring", "terms")

    def __init__(
        self,
        ring: RingSpec,
        terms: Mapping[tuple[int, ...], object] | Sequence[tuple[tuple[int, ...], object]] = (),
    ) -> None:
        self.ring = ring
        n = ring.nvars
        acc: dict[tuple[int, ...], FieldElement] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n or any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {ring}")
            c = ring.field.element(coeff)
            prev = acc.get(exps)
            c = c if prev is None else prev + c
            if c.is_zero:
                acc.pop(exps, None)
            else:
                acc[exps] = c
        self.terms = acc

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> FieldElement:
        return self.terms.get(tuple(exps), self.ring.field.zero())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], FieldElement]]:
        """Terms in canonical order (graded lex, highest first)."""
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]))

    def _require_same_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(
                f"cannot combine polynomials over {self.ring} and {other.ring}"
            )

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._require_same_ring(other)
            return other
        if isinstance(other, FieldElement) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        ):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self.terms)
        for exps, c in rhs.terms.items():
            prev = acc.get(exps)
            s = c if prev is None else prev + c
            if s.is_zero:
                acc.pop(exps, None)
            else:
                acc[exps] = s
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict[tuple[int, ...], FieldElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in rhs.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                prev = acc.get(key)
                s = c if prev is None else prev + c
                if s.is_zero:
                    acc.pop(key, None)
                else:
                    acc[key] = s
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {exponent!r}")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (FieldElement, int, Fraction)) and not isinstance(other, bool):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return not self.is_zero

    def total_degree(self) -> int | None:
        """Total degree, or None for the zero polynomial (degree undefined)."""
        if self.is_zero:
            return None
        return max(sum(e) for e in self.terms)

    def degree_in(self, j: int) -> int | None:
        """Degree in variable j (1-based), or None for the zero polynomial."""
        if not 1 <= j <= self.ring.nvars:
            raise ValueError(f"variable index must be in 1..{self.ring.nvars}, got {j}")
        if self.is_zero:
            return None
        return max(e[j - 1] for e in self.terms)

    def evaluate(self, point: Sequence) -> FieldElement:
        """Evaluate at a point, one scalar per variable."""
        if len(point) != self.ring.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables"
            )
        values = [self.ring.field.element(v) for v in point]
        total = self.ring.field.zero()
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Apply the ring map sending variable j to images[j - 1].

        All images must share one target ring over the same field; the result
        lives in that ring.
        """
        if len(images) != self.ring.nvars:
            raise ValueError(
                f"got {len(images)} images for {self.ring.nvars} variables"
            )
        if not images:
            raise ValueError("no images")
        target = images[0].ring
        for img in images:
            if not isinstance(img, Polynomial) or img.ring != target:
                raise RingMismatchError("all substitution images must share one ring")
        if target.field != self.ring.field:
            raise RingMismatchError(
                f"cannot move coefficients from {self.ring.field} to {target.field}"
            )
        # powers[j] caches images[j]^0, ^1, ... as needed.
        powers: list[list[Polynomial]] = [[target.one(), img] for img in images]
        result = target.zero()
        for exps, c in self.terms.items():
            term = target.constant(c)
            for j, e in enumerate(exps):
                if not e:
                    continue
                cache = powers[j]
                while len(cache) <= e:
                    cache.append(cache[-1] * cache[1])
                term = term * cache[e]
            result = result + term
        return result

    def homogeneous_component(self, degree: int) -> "Polynomial":
        """The sum of the terms of exactly the given total degree."""
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        return Polynomial(
            self.ring, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def leading_form(self) -> "Polynomial":
        """The top-degree homogeneous component; rejects the zero polynomial."""
        d = self.total_degree()
        if d is None:
            raise ZeroPolynomialError("the zero polynomial has no leading form")
        return self.homogeneous_component(d)

    def is_homogeneous(self) -> bool:
        """True when all terms share one total degree; the zero polynomial counts."""
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def split_by_support(self, k: int) -> tuple["Polynomial", "Polynomial"]:
        """Split into (dependent, free) parts relative to the first k variables.

        The dependent part collects every term touching one of variables
        1..k; the free part collects the rest.  Their sum is the original
        polynomial and the split is support-disjoint.  k = 0 makes
        everything free.
        """
        if not 0 <= k <= self.ring.nvars:
            raise ValueError(f"k must be in 0..{self.ring.nvars}, got {k}")
        dependent = {}
        free = {}
        for exps, c in self.terms.items():
            if any(exps[i] for i in range(k)):
                dependent[exps] = c
            else:
                free[exps] = c
        return Polynomial(self.ring, dependent), Polynomial(self.ring, free)

    def coefficients_in(self, j: int) -> dict[int, "Polynomial"]:
        """Coefficients of the powers of variable j (1-based).

        Maps each exponent e that occurs to the coefficient polynomial of
        t_j^e, which lives in the same ring but is free of variable j.
        """
        if not 1 <= j <= self.ring.nvars:
            raise ValueError(f"variable index must be in 1..{self.ring.nvars}, got {j}")
        buckets: dict[int, dict[tuple[int, ...], FieldElement]] = {}
        i = j - 1
        for exps, c in self.terms.items():
            e = exps[i]
            stripped = exps[:i] + (0,) + exps[i + 1 :]
            buckets.setdefault(e, {})[stripped] = c
        return {e: Polynomial(self.ring, terms) for e, terms in buckets.items()}

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], FieldElement]]:
        return iter(self.sorted_terms())

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        rational = self.ring.field.kind is FieldKind.RATIONALS
        names = self.ring.variables
        pieces: list[str] = []
        for idx, (exps, coeff) in enumerate(self.sorted_terms()):
            value = coeff.value
            negative = rational and value < 0
            magnitude = -value if negative else value
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e
            ]
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            if idx == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<Polynomial {self} over {self.ring}>"


def embed(f: Polynomial, target: RingSpec) -> Polynomial:
    """Reinterpret f in a ring that extends its ring by appended variables."""
    n = f.ring.nvars
    if (
        target.field != f.ring.field
        or target.nvars < n
        or target.variables[:n] != f.ring.variables
    ):
        raise RingMismatchError(f"{target} does not extend {f.ring}")
    pad = (0,) * (target.nvars - n)
    return Polynomial(target, {exps + pad: c for exps, c in f.terms.items()})


def random_scalar(rng: Random, field: FieldSpec) -> FieldElement:
    """A small random scalar; may be zero."""
    if field.kind is FieldKind.PRIME:
        return field.element(rng.randrange(field.modulus))
    return field.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


def random_polynomial(
    rng: Random,
    ring: RingSpec,
    *,
    max_degree: int = 5,
    max_terms: int = 4,
    nonzero: bool = False,
) -> Polynomial:
    """A random sparse polynomial with small coefficients, for test sampling."""
    n = ring.nvars
    while True:
        terms = []
        for _ in range(rng.randint(0, max_terms)):
            exps = [0] * n
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(n)] += 1
            terms.append((tuple(exps), random_scalar(rng, ring.field)))
        f = Polynomial(ring, terms)
        if not (nonzero and f.is_zero):
            return f
