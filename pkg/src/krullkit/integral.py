"""Integral extensions presented by a generator monic in the last variable.

Write R for the full polynomial ring, R' for the subring of polynomials
free of the last variable t_n, and g for a generator monic in t_n of
degree d >= 1.  Division by g is exact and unique, the quotient R/<g> is a
free R'-module on the cosets of 1, t_n, ..., t_n^(d-1), and multiplication
by any coset is an R'-linear action on that basis.  The characteristic
polynomial of the action is a monic integral dependence for the coset
(Cayley-Hamilton), and stripping its trailing zero roots produces, when the
quotient cooperates, a nonzero constant witness c0 in R' together with a
cofactor w such that f * w = c0 modulo g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateCharPolyError,
    NotMonicError,
    PreconditionViolatedError,
    RingMismatchError,
    ZeroCosetError,
)
from .poly import Polynomial, RingSpec


class MonicGenerator:
    """A polynomial monic in the last variable, of positive degree there.

    Exposes the degree d and the tail coefficients c_0..c_(d-1), which live
    in the same ring but are free of the last variable.
    """

    __slots__ = ("polynomial", "degree", "coefficients")

    def __init__(self, polynomial: Polynomial) -> None:
        ring = polynomial.ring
        n = ring.nvars
        d = polynomial.degree_in(n)
        if d is None or d < 1:
            raise NotMonicError(
                f"generator must have positive degree in {ring.variables[-1]}"
            )
        slices = polynomial.coefficients_in(n)
        if slices[d] != ring.one():
            raise NotMonicError(
                f"leading coefficient in {ring.variables[-1]} is "
                f"{slices[d]}, not 1"
            )
        self.polynomial = polynomial
        self.degree = d
        self.coefficients = tuple(slices.get(i, ring.zero()) for i in range(d))

    @property
    def ring(self) -> RingSpec:
        return self.polynomial.ring

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonicGenerator):
            return NotImplemented
        return self.polynomial == other.polynomial

    __hash__ = None

    def __repr__(self) -> str:
        return f"MonicGenerator({self.polynomial!r})"


def _generator(g: "Polynomial | MonicGenerator") -> MonicGenerator:
    return g if isinstance(g, MonicGenerator) else MonicGenerator(g)


def _slice(f: Polynomial, e: int) -> Polynomial:
    # Coefficient of t_n^e, free of t_n.
    i = f.ring.nvars - 1
    return Polynomial(
        f.ring,
        {
            exps[:i] + (0,): c
            for exps, c in f.terms.items()
            if exps[i] == e
        },
    )


def divide_monic(
    f: Polynomial, g: "Polynomial | MonicGenerator"
) -> tuple[Polynomial, Polynomial]:
    """Divide by a monic-in-t_n generator: f = q * g + r with deg_tn r < d.

    Because the divisor is monic in t_n, the division needs no field
    inverses beyond the coefficients already present, and the (q, r) pair
    is unique.
    """
    gen = _generator(g)
    if f.ring != gen.ring:
        raise RingMismatchError(f"{f.ring} is not {gen.ring}")
    n = f.ring.nvars
    d = gen.degree
    q = f.ring.zero()
    r = f
    while not r.is_zero:
        e = r.degree_in(n)
        if e < d:
            break
        term = _slice(r, e) * f.ring.gen(n) ** (e - d)
        q = q + term
        r = r - term * gen.polynomial
    return q, r


def reduce_mod(f: Polynomial, g: "Polynomial | MonicGenerator") -> Polynomial:
    """The remainder of f modulo a monic-in-t_n generator."""
    return divide_monic(f, g)[1]


def principal_member(f: Polynomial, g: "Polynomial | MonicGenerator") -> bool:
    """Whether f lies in the principal ideal of a monic-in-t_n generator."""
    return reduce_mod(f, g).is_zero


def subring_intersection_trivial(
    candidate: Polynomial, g: "Polynomial | MonicGenerator"
) -> bool:
    """Whether a last-variable-free candidate avoids the generator's ideal.

    The candidate must be free of t_n (that is the subring R'); a nonzero
    remainder of t_n-degree below d cannot be a multiple of g, so for
    nonzero candidates this is always True and the check is a direct
    certificate that R' meets the ideal only in zero.
    """
    gen = _generator(g)
    if candidate.ring != gen.ring:
        raise RingMismatchError(f"{candidate.ring} is not {gen.ring}")
    n = candidate.ring.nvars
    if not candidate.is_zero and candidate.degree_in(n) != 0:
        raise PreconditionViolatedError(
            f"candidate must be free of {candidate.ring.variables[-1]}"
        )
    return candidate.is_zero or not principal_member(candidate, gen)


@dataclass(frozen=True)
class QuotientElement:
    """A residue class modulo a monic generator, held by its remainder."""

    generator: MonicGenerator
    residue: Polynomial

    def __str__(self) -> str:
        return str(self.residue)


def coset(f: Polynomial, g: "Polynomial | MonicGenerator") -> QuotientElement:
    gen = _generator(g)
    return QuotientElement(gen, reduce_mod(f, gen))


def coset_action_matrix(
    f: Polynomial, g: "Polynomial | MonicGenerator"
) -> list[list[Polynomial]]:
    """The matrix of multiplication by f on the basis 1, t_n, ..., t_n^(d-1).

    Row i lists the coordinates of f * t_n^i reduced modulo g; every entry
    is free of t_n.
    """
    gen = _generator(g)
    if f.ring != gen.ring:
        raise RingMismatchError(f"{f.ring} is not {gen.ring}")
    ring = f.ring
    n = ring.nvars
    d = gen.degree
    rows = []
    image = reduce_mod(f, gen)
    t_n = ring.gen(n)
    for _ in range(d):
        rows.append([_slice(image, j) for j in range(d)])
        image = reduce_mod(image * t_n, gen)
    return rows


def _conv_add(acc: dict, key: int, value) -> None:
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, va in a.items():
        if not va:
            continue
        for kb, vb in b.items():
            if vb:
                _conv_add(out, ka + kb, va * vb)
    return out


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        _conv_add(out, k, v)
    return out


def characteristic_polynomial(matrix, *, zero=0, one=1) -> list:
    """Coefficients of det(t*I - M), lowest degree first, length d + 1.

    Computed by cofactor expansion over univariate polynomials in t whose
    coefficients are the matrix's value type (ints, field scalars, or
    polynomials), memoized on the surviving column set so the work is
    O(2^d) minors instead of d! products.  ``zero`` and ``one`` supply the
    constants of the value type.
    """
    d = len(matrix)
    if d == 0 or any(len(row) != d for row in matrix):
        raise ValueError("matrix must be square and nonempty")
    entries = [
        [
            {0: -matrix[i][j], 1: one} if i == j else {0: -matrix[i][j]}
            for j in range(d)
        ]
        for i in range(d)
    ]
    memo: dict[tuple[int, ...], dict] = {}

    def minor(cols: tuple[int, ...]) -> dict:
        # det of the submatrix on rows d-len(cols).. and the given columns
        if not cols:
            return {0: one}
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = d - len(cols)
        acc: dict = {}
        for pos, col in enumerate(cols):
            entry = entries[row][col]
            if not any(entry.values()):
                continue
            term = _poly_mul(entry, minor(cols[:pos] + cols[pos + 1 :]))
            if pos % 2:
                term = {k: -v for k, v in term.items()}
            acc = _poly_add(acc, term)
        memo[cols] = acc
        return acc

    det = minor(tuple(range(d)))
    return [det.get(k, zero) for k in range(d + 1)]


@dataclass(frozen=True)
class IntegralityWitness:
    """A monic dependence for an element: sum(coefficients[i] * x^i) = 0.

    ``coefficients`` run from the constant term up and the top one is 1, so
    the witness certifies the element is integral over the coefficients'
    ring.
    """

    coefficients: tuple
    element: object

    def to_json_dict(self) -> dict:
        return {
            "char_poly": [str(c) for c in self.coefficients],
            "element": str(self.element),
            "check": "zero",
        }

    def annihilates_modulo(self, g: "Polynomial | MonicGenerator") -> bool:
        """Evaluate the dependence at the element, modulo g; True means zero."""
        gen = _generator(g)
        element = self.element
        if not isinstance(element, Polynomial):
            raise TypeError("annihilation check needs a polynomial element")
        acc = element.ring.zero()
        for c in reversed(self.coefficients):
            acc = reduce_mod(acc * element + c, gen)
        return acc.is_zero


def integrality_witness_from_action(
    matrix, element, *, zero=0, one=1
) -> IntegralityWitness:
    """Cayley-Hamilton: the action matrix's characteristic polynomial kills
    the element, so it is a monic integral dependence."""
    coeffs = characteristic_polynomial(matrix, zero=zero, one=one)
    return IntegralityWitness(tuple(coeffs), element)


def coset_integrality_witness(
    f: Polynomial, g: "Polynomial | MonicGenerator"
) -> IntegralityWitness:
    """The integral dependence of f's coset via its multiplication action."""
    gen = _generator(g)
    ring = gen.ring
    matrix = coset_action_matrix(f, gen)
    return integrality_witness_from_action(
        matrix, f, zero=ring.zero(), one=ring.one()
    )


@dataclass(frozen=True)
class ReductionCoefficients:
    """Coordinates of one element in the basis 1, a, ..., a^(d-1) of R[a]."""

    coefficients: tuple

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("need at least one coefficient")

    @property
    def rank(self) -> int:
        return len(self.coefficients)


def power_reduce(
    relation: ReductionCoefficients, i: int, *, zero=0, one=1
) -> ReductionCoefficients:
    """Coordinates of a^i, given the coordinates of a^d as the relation.

    ``relation`` holds the d coordinates expressing a^d in the basis
    1, ..., a^(d-1) (for a monic dependence these are the negated lower
    coefficients).  Powers below d are unit vectors; higher powers follow
    the recurrence obtained by multiplying the previous coordinates by a
    and substituting the relation for the overflowing a^d:

        r'_0 = r_(d-1) * c_0,   r'_j = r_(j-1) + r_(d-1) * c_j.
    """
    if not isinstance(i, int) or i < 0:
        raise ValueError(f"power must be a nonnegative int, got {i!r}")
    c = relation.coefficients
    d = len(c)
    if i < d:
        return ReductionCoefficients(
            tuple(one if j == i else zero for j in range(d))
        )
    r = list(c)
    for _ in range(i - d):
        top = r[d - 1]
        r = [top * c[0]] + [r[j - 1] + top * c[j] for j in range(1, d)]
    return ReductionCoefficients(tuple(r))


def contraction_witness(
    f: Polynomial, g: "Polynomial | MonicGenerator"
) -> tuple[Polynomial, QuotientElement]:
    """A nonzero last-variable-free constant hit by multiples of f modulo g.

    Strips the trailing zero roots from the characteristic polynomial of
    f's coset action: p(t) = t^e * q(t) with q(0) nonzero.  The constant is
    c0 = q(0), the cofactor w is built from q's higher coefficients, and
    f * w = c0 modulo g.  Raises :class:`ZeroCosetError` when f reduces to
    zero, and :class:`DegenerateCharPolyError` when p is a pure power of t
    or when the stripped relation fails to hold (the coset is a zero
    divisor, so the quotient gave no usable witness; reported, never
    patched).
    """
    gen = _generator(g)
    residue = reduce_mod(f, gen)
    if residue.is_zero:
        raise ZeroCosetError("the element is a multiple of the generator")
    ring = gen.ring
    witness = coset_integrality_witness(f, gen)
    coeffs = witness.coefficients
    e = next(i for i, c in enumerate(coeffs) if not c.is_zero)
    if e == len(coeffs) - 1:
        raise DegenerateCharPolyError(
            "characteristic polynomial is a pure power of t"
        )
    stripped = coeffs[e:]
    constant = stripped[0]
    w = ring.zero()
    power = ring.one()
    for b in stripped[1:]:
        w = w + b * power
        power = reduce_mod(power * residue, gen)
    w = reduce_mod(-w, gen)
    if not reduce_mod(f * w - constant, gen).is_zero:
        raise DegenerateCharPolyError(
            "stripped relation does not hold, the coset is a zero divisor"
        )
    return constant, QuotientElement(gen, w)
