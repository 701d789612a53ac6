"""Command line interface over the toolkit.

Every command takes the ring description flags ``--vars`` (a count for the
default names t1..tn, or an explicit comma-separated name list) and
``--field`` (``Q`` or ``F<p>``), prints text by default or a single JSON
document under ``--json``, and exits 0 on success, 1 on a domain error
(reported as ``error: <Identifier>: <message>`` on stderr), or 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chains import DEFAULT_SEED, MonomialPrimeIdeal, extract_min_power, verify_chain
from .errors import KrullkitError
from .field import FieldElement, FieldSpec
from .integral import (
    ReductionCoefficients,
    contraction_witness,
    coset_integrality_witness,
    divide_monic,
    power_reduce,
    principal_member,
)
from .normalize import monicize, nonvanishing_point, nonvanishing_point_homogeneous
from .parse import ParseError, parse_polynomial
from .poly import Polynomial, RingSpec


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _make_ring(args: argparse.Namespace) -> RingSpec:
    field = FieldSpec.from_text(args.field)
    spec = args.vars.strip()
    if spec.isdigit():
        return RingSpec.default(field, int(spec))
    names = tuple(name.strip() for name in spec.split(","))
    return RingSpec(field, names)


def _parse_scalar(text: str, field: FieldSpec) -> FieldElement:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad scalar literal {text!r}") from None
    return field.element(value)


def _poly_arg(args: argparse.Namespace, ring: RingSpec, name: str = "poly") -> Polynomial:
    return parse_polynomial(getattr(args, name), ring)


def _cmd_eval(args, ring):
    f = _poly_arg(args, ring)
    point = [_parse_scalar(part, ring.field) for part in args.at.split(",")]
    value = f.evaluate(point)
    return str(value), {"value": str(value)}


def _resolve_variable(ring: RingSpec, spec: str) -> int:
    if spec.isdigit():
        index = int(spec)
        if not 1 <= index <= ring.nvars:
            raise ValueError(f"variable index {index} out of range for {ring}")
        return index
    try:
        return ring.index_of(spec)
    except KeyError:
        raise ValueError(f"unknown variable {spec!r} in {ring}") from None


def _cmd_degree(args, ring):
    f = _poly_arg(args, ring)
    if args.var is not None:
        d = f.degree_in(_resolve_variable(ring, args.var))
    else:
        d = f.total_degree()
    text = "undefined" if d is None else str(d)
    return text, {"degree": d}


def _cmd_homog(args, ring):
    f = _poly_arg(args, ring)
    if args.leading:
        form = f.leading_form()
        return str(form), {"leading_form": str(form)}
    if args.degree is not None:
        part = f.homogeneous_component(args.degree)
        return str(part), {"component": str(part), "degree": args.degree}
    answer = f.is_homogeneous()
    return _bool_text(answer), {"homogeneous": answer}


def _cmd_split(args, ring):
    f = _poly_arg(args, ring)
    dependent, free = f.split_by_support(args.level)
    text = f"dependent: {dependent}\nfree: {free}"
    return text, {"dependent": str(dependent), "free": str(free)}


def _cmd_member(args, ring):
    f = _poly_arg(args, ring)
    answer = MonomialPrimeIdeal(ring, args.level).contains(f)
    return _bool_text(answer), {"member": answer}


def _cmd_minpow(args, ring):
    f = _poly_arg(args, ring)
    dec = extract_min_power(f, args.level)
    text = f"power: {dec.power}\nlower: {dec.lower_part}\ncofactor: {dec.cofactor}"
    return text, {
        "power": dec.power,
        "lower": str(dec.lower_part),
        "cofactor": str(dec.cofactor),
    }


def _cmd_chain_verify(args, ring):
    report = verify_chain(ring, checks_per_level=args.checks, seed=args.seed)
    lines = [
        f"ring: {report.ring}",
        f"accepted: {_bool_text(report.accepted)}",
        f"proper: {_bool_text(report.proper)}",
        f"zero ideal checks passed: {report.zero_ideal_checks_passed}",
    ]
    for level in report.levels:
        lines.append(
            f"level {level.level}: witness {level.witness} "
            f"in_upper {_bool_text(level.in_upper)} "
            f"in_lower {_bool_text(level.in_lower)} "
            f"checks {level.product_checks_passed}"
        )
    lines.extend(f"failure: {msg}" for msg in report.failures)
    return "\n".join(lines), report.to_json_dict()


def _cmd_nonvanish(args, ring):
    f = _poly_arg(args, ring)
    point = (
        nonvanishing_point_homogeneous(f)
        if args.homogeneous
        else nonvanishing_point(f)
    )
    return ",".join(str(c) for c in point), {"point": [str(c) for c in point]}


def _cmd_monicize(args, ring):
    result = monicize(_poly_arg(args, ring))
    doc = result.to_json_dict()
    text = "\n".join(
        [
            f"a: {','.join(doc['a'])}",
            f"lambda: {doc['lambda']}",
            f"g: {doc['g']}",
            f"degree: {doc['degree']}",
        ]
    )
    return text, doc


def _cmd_divide(args, ring):
    f = _poly_arg(args, ring, "poly")
    g = _poly_arg(args, ring, "generator")
    q, r = divide_monic(f, g)
    return f"quotient: {q}\nremainder: {r}", {"quotient": str(q), "remainder": str(r)}


def _cmd_pmember(args, ring):
    f = _poly_arg(args, ring, "poly")
    g = _poly_arg(args, ring, "generator")
    answer = principal_member(f, g)
    return _bool_text(answer), {"member": answer}


def _cmd_witness(args, ring):
    f = _poly_arg(args, ring, "poly")
    g = _poly_arg(args, ring, "generator")
    witness = coset_integrality_witness(f, g)
    if not witness.annihilates_modulo(g):
        raise RuntimeError("integral dependence failed its annihilation check")
    doc = witness.to_json_dict()
    text = "\n".join(
        [
            f"char_poly: {', '.join(doc['char_poly'])}",
            f"element: {doc['element']}",
            "check: zero",
        ]
    )
    return text, doc


def _cmd_power_reduce(args, ring):
    coeffs = tuple(
        parse_polynomial(part, ring) for part in args.relation.split(",")
    )
    relation = ReductionCoefficients(coeffs)
    reduced = power_reduce(
        relation, args.power, zero=ring.zero(), one=ring.one()
    )
    coords = [str(c) for c in reduced.coefficients]
    return ",".join(coords), {"coordinates": coords}


def _cmd_contract_witness(args, ring):
    f = _poly_arg(args, ring, "poly")
    g = _poly_arg(args, ring, "generator")
    constant, cofactor = contraction_witness(f, g)
    text = f"constant: {constant}\ncofactor: {cofactor}"
    return text, {"constant": str(constant), "cofactor": str(cofactor)}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--vars",
        default="1",
        help="variable count (default names t1..tn) or comma-separated names",
    )
    common.add_argument("--field", default="Q", help="coefficient field, Q or F<p>")
    common.add_argument(
        "--json", action="store_true", help="print one JSON document instead of text"
    )
    common.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks"
    )

    parser = argparse.ArgumentParser(
        prog="krullkit",
        description="Exact polynomial-ring toolkit: chains, monicization, "
        "integral extensions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text, parents=(common,)):
        p = sub.add_parser(name, parents=list(parents), help=help_text)
        p.set_defaults(func=handler)
        return p

    p = command("eval", _cmd_eval, "evaluate a polynomial at a point")
    p.add_argument("poly")
    p.add_argument("--at", required=True, help="comma-separated coordinates")

    p = command("degree", _cmd_degree, "total degree, or degree in one variable")
    p.add_argument("poly")
    p.add_argument("--in", dest="var", metavar="VAR", help="variable name or 1-based index")

    p = command("homog", _cmd_homog, "homogeneity test, component, or leading form")
    p.add_argument("poly")
    p.add_argument("-d", "--degree", type=int, help="extract this degree's component")
    p.add_argument(
        "--leading", action="store_true", help="extract the leading form"
    )

    p = command("split", _cmd_split, "split into dependent and free parts")
    p.add_argument("poly")
    p.add_argument("-k", "--level", type=int, required=True)

    p = command("member", _cmd_member, "membership in the level-k variable ideal")
    p.add_argument("poly")
    p.add_argument("-k", "--level", type=int, required=True)

    p = command("minpow", _cmd_minpow, "extract the minimal power of t_k")
    p.add_argument("poly")
    p.add_argument("-k", "--level", type=int, required=True)

    p = command("chain-verify", _cmd_chain_verify, "verify the full ideal chain")
    p.add_argument(
        "--checks", type=int, default=100, help="product checks per level"
    )

    p = command("nonvanish", _cmd_nonvanish, "find a non-vanishing point")
    p.add_argument("poly")
    p.add_argument(
        "--homogeneous",
        action="store_true",
        help="normalize the last coordinate to 1 (input must be a form)",
    )

    p = command("monicize", _cmd_monicize, "make monic in the last variable")
    p.add_argument("poly")

    p = command("divide", _cmd_divide, "divide by a monic-in-t_n generator")
    p.add_argument("poly")
    p.add_argument("generator")

    p = command("pmember", _cmd_pmember, "membership in a monic principal ideal")
    p.add_argument("poly")
    p.add_argument("generator")

    p = command("witness", _cmd_witness, "integral dependence of a coset")
    p.add_argument("poly")
    p.add_argument("generator")

    p = command("power-reduce", _cmd_power_reduce, "reduce a power to basis coordinates")
    p.add_argument(
        "--relation",
        required=True,
        help="comma-separated coordinates of a^d in the basis 1..a^(d-1)",
    )
    p.add_argument("-i", "--power", type=int, required=True)

    p = command(
        "contract-witness",
        _cmd_contract_witness,
        "nonzero last-variable-free constant in the contracted ideal",
    )
    p.add_argument("poly")
    p.add_argument("generator")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ring = _make_ring(args)
        text, doc = args.func(args, ring)
    except ParseError as exc:
        print(f"error: {exc.identifier}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: InvalidArgument: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: DivisionByZero: {exc}", file=sys.stderr)
        return 1
    except KrullkitError as exc:
        print(f"error: {exc.identifier}: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(doc, indent=2) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
