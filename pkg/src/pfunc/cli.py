"""``pfunc`` command line.

Exit status: 0 on success (a "not a p-function" verdict is a successful
check), 1 on a domain error, 2 on a usage error.
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import pfunctions, tools
from .errors import PFuncError
from .rational import approx, format_rational, power_of_two_bound
from .serialize import (
    classification_to_json,
    dumps,
    load_json,
    lottery_spec_from_json,
    order_from_json,
    order_to_json,
    pyramid_from_json,
    pyramid_to_json,
    snooping_report_to_json,
    statistic_from_json,
    statistic_to_json,
    trial_from_json,
)
from .trial import AggregatedTrial
from .worked_examples import coin_p_value, lottery_p_value, snooping_simulation

KINDS = ("order", "pyramid", "statistic")


def _readable_file(text):
    path = Path(text)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"cannot read file {text!r}")
    return path


def _load_tool(kind, path):
    obj = load_json(path)
    return {"order": order_from_json, "pyramid": pyramid_from_json,
            "statistic": statistic_from_json}[kind](obj)


def _dump_tool(kind, tool):
    return {"order": order_to_json, "pyramid": pyramid_to_json,
            "statistic": statistic_to_json}[kind](tool)


def _convert(space, tool, src, dst):
    """Route any tool kind to any other through the induced test order."""
    if src == dst:
        return tool
    if src == "order":
        order = tool
    elif src == "pyramid":
        order = tools.induce_order_from_pyramid(space.omega, tool)
    else:
        order = tools.induce_order_from_statistic(space, tool)
    if dst == "order":
        return order
    if dst == "pyramid":
        return tools.induce_pyramid_from_order(order)
    return tools.induce_statistic_from_order(space, order)


def cmd_validate(args):
    space = trial_from_json(load_json(args.trial))
    report = {"valid": True, "outcomes": len(space)}
    if isinstance(space, AggregatedTrial):
        report = {"valid": True, "classes": len(space), "outcomes": str(space.outcome_count)}
    return report


def cmd_induce(args):
    space = trial_from_json(load_json(args.trial))
    tool = _load_tool(args.source, args.input)
    return _dump_tool(args.target, _convert(space, tool, args.source, args.target))


def cmd_canonize(args):
    space = trial_from_json(load_json(args.trial))
    tool = _load_tool(args.kind, args.input)
    if args.kind == "pyramid":
        return pyramid_to_json(tools.canonic_version_of_pyramid(space.omega, tool))
    return statistic_to_json(tools.canonic_version_of_statistic(space, tool))


def cmd_check(args):
    space = trial_from_json(load_json(args.trial))
    f = statistic_from_json(load_json(args.statistic))
    verdict = pfunctions.classify_p_function(space, f)
    status = 1 if args.strict and verdict.kind is not pfunctions.PKind.EXACT else 0
    return classification_to_json(verdict), status


def cmd_pvalue(args):
    space = trial_from_json(load_json(args.trial))
    if args.order is not None:
        order = order_from_json(load_json(args.order))
        p = pfunctions.exact_p_value(space, order, args.outcome)
    else:
        f = statistic_from_json(load_json(args.statistic))
        p = pfunctions.exact_p_value_from_statistic(space, f, args.outcome)
    return {"p": p}


def cmd_bonferroni(args):
    space = trial_from_json(load_json(args.trial))
    stats = [statistic_from_json(load_json(path)) for path in args.statistic]
    return statistic_to_json(pfunctions.bonferroni(space, stats))


def cmd_example_coin(args):
    p = coin_p_value(args.tosses, args.observed_min)
    return {"p": p, "tosses": args.tosses, "observed_min": args.observed_min,
            "log2_bound": power_of_two_bound(p)}


def cmd_example_lottery(args):
    spec = lottery_spec_from_json(load_json(args.spec))
    p = lottery_p_value(spec, args.threshold)
    return {"p": p, "threshold": args.threshold, "log2_bound": power_of_two_bound(p)}


def cmd_snoop(args):
    return snooping_report_to_json(
        snooping_simulation(args.tosses, args.threshold, args.seed, args.max_reps)
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable JSON output")

    parser = argparse.ArgumentParser(prog="pfunc", parents=[common],
                                     description="Exact p-values and p-function checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a trial file")
    p.add_argument("--trial", type=_readable_file, required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("induce", parents=[common], help="convert between test tools")
    p.add_argument("--trial", type=_readable_file, required=True)
    p.add_argument("--from", dest="source", choices=KINDS, required=True)
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.add_argument("--input", type=_readable_file, required=True)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("canonize", parents=[common], help="canonic version of a tool")
    p.add_argument("--trial", type=_readable_file, required=True)
    p.add_argument("--kind", choices=("pyramid", "statistic"), required=True)
    p.add_argument("--input", type=_readable_file, required=True)
    p.set_defaults(func=cmd_canonize)

    p = sub.add_parser("check", parents=[common], help="classify a statistic as a p-function")
    p.add_argument("--trial", type=_readable_file, required=True)
    p.add_argument("--statistic", type=_readable_file, required=True)
    p.add_argument("--strict", action="store_true",
                   help="exit 1 unless the statistic is an exact p-function")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pvalue", parents=[common], help="exact p-value of an outcome")
    p.add_argument("--trial", type=_readable_file, required=True)
    tool = p.add_mutually_exclusive_group(required=True)
    tool.add_argument("--order", type=_readable_file)
    tool.add_argument("--statistic", type=_readable_file)
    p.add_argument("--outcome", required=True)
    p.set_defaults(func=cmd_pvalue)

    p = sub.add_parser("bonferroni", parents=[common], help="n * min of n statistics")
    p.add_argument("--trial", type=_readable_file, required=True)
    p.add_argument("--statistic", type=_readable_file, action="append", required=True)
    p.set_defaults(func=cmd_bonferroni)

    p = sub.add_parser("example", parents=[common], help="worked examples")
    ex = p.add_subparsers(dest="example", required=True)
    q = ex.add_parser("coin", parents=[common], help="P[min(heads, tails) <= M]")
    q.add_argument("--tosses", type=int, required=True)
    q.add_argument("--observed-min", type=int, default=1)
    q.set_defaults(func=cmd_example_coin)
    q = ex.add_parser("lottery", parents=[common], help="P[distance to organizer <= K]")
    q.add_argument("--spec", type=_readable_file, required=True)
    q.add_argument("--threshold", type=int, default=1)
    q.set_defaults(func=cmd_example_lottery)

    p = sub.add_parser("snoop", parents=[common], help="data-snooping simulation")
    p.add_argument("--tosses", type=int, required=True)
    p.add_argument("--threshold", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-reps", type=int, required=True)
    p.set_defaults(func=cmd_snoop)
    return parser


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_jsonable(v) for v in obj]
    return obj


def _human(obj, indent=""):
    lines = []
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_human(value, indent + "  "))
        elif isinstance(value, list):
            lines.append(f"{indent}{key}:")
            lines.extend(f"{indent}  - {', '.join(v) if isinstance(v, list) else v}"
                         for v in value)
        elif isinstance(value, Fraction) or _looks_rational(key, value):
            q = Fraction(value)
            lines.append(f"{indent}{key}: {format_rational(q)}  (~ {approx(q)})")
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def _looks_rational(key, value):
    return isinstance(value, str) and key not in ("kind",) and \
        value.lstrip("-").replace("/", "", 1).isdigit()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    status = 0
    try:
        result = args.func(args)
        if isinstance(result, tuple):
            result, status = result
    except PFuncError as exc:
        name = type(exc).__name__
        if as_json:
            print(dumps({"error": name, "message": str(exc)}))
        else:
            print(f"pfunc: {name}: {exc}", file=sys.stderr)
        return 1
    if as_json:
        print(dumps(_jsonable(result)))
    else:
        print("\n".join(_human(result)))
    return status


if __name__ == "__main__":
    sys.exit(main())
