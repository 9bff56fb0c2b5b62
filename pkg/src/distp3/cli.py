"""Command-line interface: ``distp3 <subcommand> ...``.

Exit codes for ``analyze``: 0 success with a consistent Hilbert check,
1 invalid input, 2 not a distribution, 3 resource limit hit, 4 analysis
finished but the Hilbert check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify
from .coeffs import field_from_spec
from .distribution import InvalidFormError, NotADistributionError, analyze, form_from_json
from .groebner import GroebnerLimitError, Ideal, TopDimError
from .hilbert import hilbert_polynomial, scheme_invariants
from .moduli import h0_tp3, h_line_bundle, moduli_dim_335
from .poly import P3, PolynomialSyntaxError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_DISTRIBUTION = 2
EXIT_RESOURCE = 3
EXIT_INCONSISTENT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _field(spec):
    return field_from_spec(spec)


def cmd_classify(args) -> int:
    policy = classify.ConstraintPolicy.named(args.policy)
    if args.policy_config:
        policy = classify.ConstraintPolicy.from_json(
            {**policy.to_json(), **_load_json(args.policy_config)}
        )
    if args.stable_from is not None:
        policy = policy.with_options(stable_from=args.stable_from)
    table = classify.enumerate(args.degree, policy, degc_max=args.degc_bound)
    sys.stdout.write(table.render(args.format))
    return EXIT_OK


def cmd_analyze(args) -> int:
    field = _field(args.field)
    form = form_from_json(_load_json(args.form_file), field)
    report = analyze(form, seed=args.seed)
    text = json.dumps(report.to_json(), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if not report.hilbert_consistent:
        chk = report.hilbert_check
        print(
            f"Hilbert check failed: expected {chk.expected}, computed {chk.computed}",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


def _ideal_from_file(path, field) -> Ideal:
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("ideal", data.get("generators"))
    if not isinstance(data, list) or not data:
        raise InvalidFormError(["ideal JSON must be a non-empty list of polynomial strings"])
    ring = P3.with_field(field)
    I = Ideal.parse(data, ring)
    if not I.is_homogeneous():
        raise InvalidFormError(["ideal generators must be homogeneous"])
    return I


def cmd_hilbert(args) -> int:
    I = _ideal_from_file(args.ideal, _field(args.field))
    if args.saturate:
        from .groebner import saturate_irrelevant

        I = saturate_irrelevant(I)
    if args.json:
        inv = scheme_invariants(I)
        print(json.dumps({
            "hilbert_polynomial": str(inv.hilbert_polynomial),
            "dimension": inv.proj_dimension,
            "degree": inv.degree,
            "genus": inv.arithmetic_genus,
            "length": inv.length,
        }))
    else:
        print(hilbert_polynomial(I))
    return EXIT_OK


def cmd_cohomology(args) -> int:
    if args.tp3:
        print(h0_tp3(args.twist))
    else:
        print(" ".join(str(h_line_bundle(i, args.twist)) for i in range(4)))
    return EXIT_OK


def cmd_moduli(args) -> int:
    der = moduli_dim_335()
    print(json.dumps(der.to_json(), indent=2) if args.json else der)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(include_rational_51=args.slow)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="distp3", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="admissible Chern classes table")
    c.add_argument("--degree", type=int, default=3)
    c.add_argument("--policy", choices=["default", "strict"], default="default")
    c.add_argument("--policy-config", help="JSON file overriding policy fields")
    c.add_argument("--stable-from", type=int, help="first c2 where c3 <= c2^2 applies")
    c.add_argument("--degc-bound", type=int, help="largest singular-curve degree")
    c.add_argument("--format", choices=["md", "csv", "json"], default="md")
    c.set_defaults(func=cmd_classify)

    a = sub.add_parser("analyze", help="analyze a twisted 1-form given as JSON")
    a.add_argument("form_file")
    a.add_argument("--field", help="rational or fp:<p> (default: $DISTP3_FIELD or rational)")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--out", help="write the JSON report here instead of stdout")
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser("hilbert", help="Hilbert polynomial of an ideal given as JSON")
    h.add_argument("--ideal", required=True)
    h.add_argument("--field")
    h.add_argument("--saturate", action="store_true", help="saturate first")
    h.add_argument("--json", action="store_true", help="print all scheme invariants")
    h.set_defaults(func=cmd_hilbert)

    co = sub.add_parser("cohomology", help="cohomology of O(k) or TP^3(k)")
    co.add_argument("--tp3", action="store_true", help="h0 of the twisted tangent bundle")
    co.add_argument("--twist", type=int, required=True)
    co.set_defaults(func=cmd_cohomology)

    m = sub.add_parser("moduli", help="moduli dimension derivation")
    m.add_argument("--case", choices=["335"], required=True)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_moduli)

    s = sub.add_parser("selftest", help="run the acceptance fixtures")
    s.add_argument("--slow", action="store_true", help="also run the rational 51-point case")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotADistributionError as exc:
        print(f"not a distribution: {exc}", file=sys.stderr)
        return EXIT_NOT_DISTRIBUTION
    except (GroebnerLimitError, TopDimError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (
        InvalidFormError,
        PolynomialSyntaxError,
        classify.UnsupportedDegreeError,
        ValueError,
        KeyError,
        OSError,
    ) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
