"""Monomial prime ideals, strict chains, and min-power decompositions.

Level k of the chain is the ideal generated by the first k variables; its
members are exactly the polynomials every one of whose terms touches one of
those variables.  Level 0 is the zero ideal.  :func:`verify_chain` checks
the whole ladder 0 < level 1 < ... < level n constructively: explicit
witnesses separate consecutive levels, randomized product checks probe
primality at every level, and 1 outside the top level shows it is proper.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .errors import PreconditionViolatedError, RingMismatchError
from .poly import Polynomial, RingSpec, random_polynomial

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class MonomialPrimeIdeal:
    """The ideal of the first ``level`` variables of a ring."""

    ring: RingSpec
    level: int

    def __post_init__(self) -> None:
        if not 0 <= self.level <= self.ring.nvars:
            raise ValueError(
                f"level must be in 0..{self.ring.nvars}, got {self.level}"
            )

    def generators(self) -> tuple[Polynomial, ...]:
        return tuple(self.ring.gen(j) for j in range(1, self.level + 1))

    def contains(self, f: Polynomial) -> bool:
        """Membership: every term touches one of the first ``level`` variables.

        Decided exactly via the support split; level 0 contains only the
        zero polynomial.
        """
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} is not {self.ring}")
        _, free = f.split_by_support(self.level)
        return free.is_zero

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def product_check(self, g: Polynomial, h: Polynomial) -> bool:
        """One primality probe: if g*h is a member, some factor must be."""
        if self.contains(g * h):
            return self.contains(g) or self.contains(h)
        return True

    def contract(self) -> "MonomialPrimeIdeal":
        """The same ideal seen in the ring with the last variable dropped."""
        n = self.ring.nvars
        if n < 2:
            raise ValueError("cannot drop the only variable")
        return MonomialPrimeIdeal(self.ring.subring(n - 1), min(self.level, n - 1))


@dataclass(frozen=True)
class MinPowerDecomposition:
    """The pieces of f = lower_part + t_k^power * cofactor.

    ``lower_part`` collects the terms touching variables below k, ``power``
    is the least t_k-exponent among the rest, and ``cofactor`` has a term
    free of all of t_1..t_k.
    """

    power: int
    lower_part: Polynomial
    cofactor: Polynomial


def extract_min_power(f: Polynomial, k: int) -> MinPowerDecomposition:
    """Factor the least power of t_k out of the part of f below-support-free.

    Requires f to be a member of the level-k ideal but not of the level-(k-1)
    ideal; raises :class:`PreconditionViolatedError` otherwise.
    """
    ring = f.ring
    if not 1 <= k <= ring.nvars:
        raise ValueError(f"k must be in 1..{ring.nvars}, got {k}")
    upper = MonomialPrimeIdeal(ring, k)
    lower = MonomialPrimeIdeal(ring, k - 1)
    if not upper.contains(f) or lower.contains(f):
        raise PreconditionViolatedError(
            f"need membership at level {k} but not at level {k - 1}"
        )
    lower_part, rest = f.split_by_support(k - 1)
    i = k - 1
    power = min(exps[i] for exps in rest.terms)
    shifted = {
        exps[:i] + (exps[i] - power,) + exps[i + 1 :]: c
        for exps, c in rest.terms.items()
    }
    return MinPowerDecomposition(power, lower_part, Polynomial(ring, shifted))


@dataclass(frozen=True)
class ChainLevel:
    """Checked facts about one inclusion step of the chain."""

    level: int
    witness: Polynomial
    in_upper: bool
    in_lower: bool
    product_checks_passed: int

    def to_json_dict(self) -> dict:
        return {
            "level": self.level,
            "witness": str(self.witness),
            "in_upper": self.in_upper,
            "in_lower": self.in_lower,
            "product_checks_passed": self.product_checks_passed,
        }


@dataclass(frozen=True)
class ChainReport:
    """Outcome of a full chain verification over one ring."""

    ring: RingSpec
    levels: tuple[ChainLevel, ...]
    zero_ideal_checks_passed: int
    proper: bool
    accepted: bool
    failures: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "ring": str(self.ring),
            "accepted": self.accepted,
            "proper": self.proper,
            "zero_ideal_checks_passed": self.zero_ideal_checks_passed,
            "levels": [level.to_json_dict() for level in self.levels],
            "failures": list(self.failures),
        }


def verify_chain(
    ring: RingSpec,
    *,
    checks_per_level: int = 100,
    seed: int = DEFAULT_SEED,
    max_degree: int = 4,
    max_terms: int = 4,
) -> ChainReport:
    """Verify the strict chain of variable ideals over a ring.

    For each level k in 1..n the witness t_k must lie in level k but not in
    level k - 1, and ``checks_per_level`` randomized product checks probe
    primality.  Half of the random pairs are biased so the product really is
    a member, exercising the nontrivial branch of the implication.  The
    zero ideal gets the same treatment (biased by zeroing a factor), and
    properness means 1 is outside the top level.  Any failed check lands in
    ``failures`` with the offending witnesses, and ``accepted`` reflects the
    whole ladder.
    """
    rng = Random(seed)
    n = ring.nvars
    failures: list[str] = []

    def draw(bias_into: MonomialPrimeIdeal | None) -> Polynomial:
        f = random_polynomial(rng, ring, max_degree=max_degree, max_terms=max_terms)
        if bias_into is not None and rng.random() < 0.5:
            if bias_into.level == 0:
                return ring.zero()
            f = f * ring.gen(rng.randint(1, bias_into.level))
        return f

    zero_ideal = MonomialPrimeIdeal(ring, 0)
    zero_passed = 0
    for _ in range(checks_per_level):
        g, h = draw(zero_ideal), draw(None)
        if zero_ideal.product_check(g, h):
            zero_passed += 1
        else:
            failures.append(f"level 0: product check failed for g={g}, h={h}")

    levels = []
    for k in range(1, n + 1):
        upper = MonomialPrimeIdeal(ring, k)
        lower = MonomialPrimeIdeal(ring, k - 1)
        witness = ring.gen(k)
        in_upper = upper.contains(witness)
        in_lower = lower.contains(witness)
        if not in_upper:
            failures.append(f"level {k}: witness {witness} not in upper ideal")
        if in_lower:
            failures.append(f"level {k}: witness {witness} in lower ideal")
        passed = 0
        for _ in range(checks_per_level):
            g, h = draw(upper), draw(None)
            if upper.product_check(g, h):
                passed += 1
            else:
                failures.append(f"level {k}: product check failed for g={g}, h={h}")
        levels.append(ChainLevel(k, witness, in_upper, in_lower, passed))

    proper = ring.one() not in MonomialPrimeIdeal(ring, n)
    if not proper:
        failures.append("top level contains 1, ideal not proper")

    accepted = not failures
    return ChainReport(
        ring, tuple(levels), zero_passed, proper, accepted, tuple(failures)
    )
