"""Command-line front end.

Exit codes: 0 success or all records pass, 1 a verification failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .alternating import AnCharacter, an_sbc
from .blocks import BlockLabel, block_of, height, irr_height_zero
from .characters import degree, is_defect_zero, is_p_prime_degree, mn_value, p_valuation_of_degree
from .partitions import (
    Partition,
    conjugate,
    e_core_and_weight,
    format_partition,
    hooks,
    is_prime,
    parse_partition,
)
from .suites import SUITES, VerificationReport
from .sylow import census
from .virtual import VerificationFailure, sbc, v_block, virtual_iterate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


# -- argument types -----------------------------------------------------------

def partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not out or any(x <= 0 for x in out):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return out


def prime_arg(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def prime_list(text: str) -> list[int]:
    return [prime_arg(x) for x in text.split(",") if x.strip()]


def n_range(text: str) -> list[int]:
    """"0..15" (inclusive), "11", or "3,5,7"."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use A..B, N or N,M,...") from None
    if not out or out[0] < 0:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return out


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def pos_int(text: str) -> int:
    v = nonneg_int(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


# -- output -------------------------------------------------------------------

def emit(data: Any, lines: Sequence[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


def _cell(v: Any) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def report_lines(rep: dict) -> list[str]:
    s = rep["summary"]
    verdict = "PASS" if rep["pass"] else "FAIL"
    head = f"{rep['suite']}: {verdict} ({s['passed']}/{s['total']} records pass)"
    if "wall_time_s" in rep:
        head += f" in {rep['wall_time_s']} s"
    out = [head]
    for rec in rep["records"]:
        fields = " ".join(f"{k}={_cell(v)}" for k, v in rec.items() if k != "pass" and v not in ([], None))
        out.append(f"  {'ok  ' if rec['pass'] else 'FAIL'} {fields}")
    return out


# -- single computations ------------------------------------------------------

def cmd_core(a) -> int:
    core, w = e_core_and_weight(a.lam, a.e)
    data = {"lambda": format_partition(a.lam), "e": a.e, "core": format_partition(core), "weight": w}
    emit(data, [f"{a.e}-core: {format_partition(core)}", f"{a.e}-weight: {w}"], a.format)
    return EXIT_OK


def cmd_hooks(a) -> int:
    hs = hooks(a.lam)
    if a.e is not None:
        hs = [h for h in hs if h.length == a.e]
    rows = [{"row": h.row, "col": h.col, "length": h.length, "leg": h.leg, "arm": h.arm} for h in hs]
    lines = ["row col length leg arm"] + [f"{h.row:>3} {h.col:>3} {h.length:>6} {h.leg:>3} {h.arm:>3}" for h in hs]
    emit({"lambda": format_partition(a.lam), "hooks": rows}, lines, a.format)
    return EXIT_OK


def cmd_degree(a) -> int:
    d = degree(a.lam)
    data: dict[str, Any] = {"lambda": format_partition(a.lam), "degree": str(d)}
    lines = [f"chi[{format_partition(a.lam)}](1) = {d}"]
    if a.p is not None:
        data.update(
            p=a.p,
            valuation=p_valuation_of_degree(a.lam, a.p),
            p_prime=is_p_prime_degree(a.lam, a.p),
            defect_zero=is_defect_zero(a.lam, a.p),
        )
        lines += [
            f"nu_{a.p}(degree) = {data['valuation']}",
            f"{a.p}'-degree: {'yes' if data['p_prime'] else 'no'}",
            f"{a.p}-defect zero: {'yes' if data['defect_zero'] else 'no'}",
        ]
    emit(data, lines, a.format)
    return EXIT_OK


def cmd_charvalue(a) -> int:
    sigma = Partition(sorted(a.sigma, reverse=True))
    if sum(sigma) != sum(a.lam):
        raise UsageError(f"cycle type {format_partition(sigma)} does not match |lambda| = {sum(a.lam)}")
    v = mn_value(a.lam, sigma)
    data = {"lambda": format_partition(a.lam), "sigma": format_partition(sigma), "value": str(v)}
    emit(data, [f"chi[{format_partition(a.lam)}]({format_partition(sigma)}) = {v}"], a.format)
    return EXIT_OK


def cmd_block(a) -> int:
    b = block_of(a.lam, a.p)
    h = height(a.lam, a.p)
    data = {
        "lambda": format_partition(a.lam),
        "block": b.to_json(),
        "height": h.height,
        "defect_valuation": h.defect_group_valuation,
    }
    lines = [str(b), f"defect group order {a.p}^{h.defect_group_valuation}", f"height {h.height}"]
    emit(data, lines, a.format)
    return EXIT_OK


def _block_from_args(a) -> BlockLabel:
    if a.lam is not None:
        if a.core is not None or a.w is not None:
            raise UsageError("give either --lambda or --core/--w")
        return block_of(a.lam, a.p)
    if a.core is None or a.w is None:
        raise UsageError("need --core and --w (or --lambda)")
    try:
        return BlockLabel(a.p, a.core, a.w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_height0(a) -> int:
    b = _block_from_args(a)
    chars = sorted(irr_height_zero(b), reverse=True)
    data = {"block": b.to_json(), "height_zero": [format_partition(x) for x in chars]}
    lines = [f"{str(b)}: {len(chars)} height-zero characters"] + [f"  {format_partition(x)}" for x in chars]
    emit(data, lines, a.format)
    return EXIT_OK


def cmd_census(a) -> int:
    cen = census(a.n, a.p)
    data = {"n": a.n, "p": a.p, "order": str(cen.group_order), "census": cen.to_json()}
    lines = [f"Sylow {a.p}-subgroup of S_{a.n}, order {cen.group_order}"]
    lines += [f"  {format_partition(mu) or '-':<24} {c}" for mu, c in cen.items()]
    emit(data, lines, a.format)
    return EXIT_OK


def cmd_sbc(a) -> int:
    if a.group == "An":
        lam = a.lam
        if lam == conjugate(lam) and sum(lam) >= 2:
            if a.sign is None:
                raise UsageError(f"{format_partition(lam)} is self-conjugate; pass --sign + or -")
            char = AnCharacter(lam, a.sign)
        else:
            char = AnCharacter.restriction(lam)
        z = an_sbc(char, a.p).z
        data = {"group": "An", "label": char.to_json(), "p": a.p, "Z": str(z)}
        emit(data, [str(z)], a.format)
        return EXIT_OK
    z = sbc(a.lam, a.p).z
    emit({"group": "Sn", "lambda": format_partition(a.lam), "p": a.p, "Z": str(z)}, [str(z)], a.format)
    return EXIT_OK


def _virtual_lines(v) -> list[str]:
    return [str(v)] + [f"  {c:+d}  {format_partition(alpha)}" for alpha, c in v.terms()]


def cmd_virtual(a) -> int:
    v = virtual_iterate(a.lam, a.hooks)
    data = {"lambda": format_partition(a.lam), "hooks": a.hooks, **v.to_json()}
    emit(data, _virtual_lines(v), a.format)
    return EXIT_OK


def cmd_vb(a) -> int:
    b = _block_from_args(a)
    v = v_block(b, allow_defect_zero=True)
    emit({"block": b.to_json(), **v.to_json()}, [str(b)] + _virtual_lines(v), a.format)
    return EXIT_OK


# -- verification suites ------------------------------------------------------

# which optional flags each suite understands
SUITE_FLAGS = {
    "gdc": {"max_m", "max_e"},
    "pprime-mult": {"primes", "max_n"},
    "theorem-b-sn": {"primes", "n", "max_n"},
    "theorem-b-an": {"primes", "n", "max_n"},
    "nonvanishing": {"primes", "n", "max_n", "group"},
    "an23": {"primes", "n", "max_n"},
    "lemma-iv": {"primes", "max_n"},
    "defect-zero-restriction": {"primes", "max_n"},
    "census-oracle": {"primes", "cap"},
    "all": {"primes"},
}

DEFAULT_N_START = {"theorem-b-sn": 0, "theorem-b-an": 2, "an23": 5}


def _suite_kwargs(suite: str, a) -> dict[str, Any]:
    given = {
        k for k in ("primes", "n", "max_n", "max_m", "max_e", "group", "cap")
        if getattr(a, k, None) is not None
    }
    extra = given - SUITE_FLAGS[suite]
    if extra:
        flags = ", ".join("--" + k.replace("_", "-") for k in sorted(extra))
        raise UsageError(f"suite {suite} does not take {flags}")
    if "n" in given and "max_n" in given:
        raise UsageError("give --n or --max-n, not both")
    kw: dict[str, Any] = {}
    if a.primes is not None:
        kw["primes"] = a.primes
    if suite == "gdc":
        kw.update({k: getattr(a, k) for k in ("max_m", "max_e") if getattr(a, k) is not None})
    elif suite in ("pprime-mult", "lemma-iv", "defect-zero-restriction"):
        if a.max_n is not None:
            kw["max_n"] = a.max_n
    elif suite == "census-oracle":
        if a.cap is not None:
            kw["cap"] = a.cap
    elif suite == "nonvanishing":
        ns = a.n if a.n is not None else (list(range(a.max_n + 1)) if a.max_n is not None else None)
        if ns is not None:
            kw["sn_ns"] = kw["an_ns"] = ns
        if a.group == "Sn":
            kw["an_ns"] = []
        elif a.group == "An":
            kw["sn_ns"] = []
    elif suite in DEFAULT_N_START:
        if a.n is not None:
            kw["ns"] = a.n
        elif a.max_n is not None:
            kw["ns"] = range(DEFAULT_N_START[suite], a.max_n + 1)
    return kw


def run_suite(suite: str, a) -> VerificationReport:
    return SUITES[suite](**_suite_kwargs(suite, a))


def cmd_verify(a) -> int:
    if a.primes is not None and a.p is not None:
        raise UsageError("give --p or --primes, not both")
    if a.p is not None:
        a.primes = [a.p]
    if a.suite == "all":
        _suite_kwargs("all", a)
        reports = [
            SUITES[name](**({"primes": a.primes} if a.primes and "primes" in SUITE_FLAGS[name] else {}))
            for name in SUITES
        ]
        dumped = [r.to_json(a.timing) for r in reports]
        ok = all(r.passed for r in reports)
        data = {"suite": "all", "version": __version__, "reports": dumped, "pass": ok}
        lines = [line for rep in dumped for line in report_lines(rep)]
        lines.append(f"all: {'PASS' if ok else 'FAIL'}")
        emit(data, lines, a.format)
        return EXIT_OK if ok else EXIT_FAIL
    rep = run_suite(a.suite, a)
    data = rep.to_json(a.timing)
    emit(data, report_lines(data), a.format)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")

    parser = argparse.ArgumentParser(
        prog="sylowbranch",
        description="Characters of symmetric and alternating groups restricted to Sylow subgroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("core", cmd_core, "e-core and e-weight of a partition")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--e", type=pos_int, required=True)

    sp = add("hooks", cmd_hooks, "hook lengths, legs and arms of every cell")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--e", type=pos_int, help="only hooks of this length")

    sp = add("degree", cmd_degree, "degree of chi^lambda, optionally with p-data")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--p", type=prime_arg)

    sp = add("charvalue", cmd_charvalue, "chi^lambda at a cycle type")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--sigma", type=int_list, required=True, help="cycle type, e.g. 3,1,1")

    sp = add("block", cmd_block, "p-block label and height of chi^lambda")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--p", type=prime_arg, required=True)

    for name, fn, text in (
        ("height0", cmd_height0, "height-zero characters of a block"),
        ("vb", cmd_vb, "the virtual character V^B of a block"),
    ):
        sp = add(name, fn, text)
        sp.add_argument("--p", type=prime_arg, required=True)
        sp.add_argument("--core", type=partition_arg)
        sp.add_argument("--w", type=nonneg_int)
        sp.add_argument("--lambda", dest="lam", type=partition_arg, help="use the block of this partition")

    sp = add("census", cmd_census, "cycle-type census of a Sylow p-subgroup of S_n")
    sp.add_argument("--n", type=nonneg_int, required=True)
    sp.add_argument("--p", type=prime_arg, required=True)

    sp = add("sbc", cmd_sbc, "Sylow branching coefficient [chi restricted to P, 1_P]")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--p", type=prime_arg, required=True)
    sp.add_argument("--group", choices=("Sn", "An"), default="Sn")
    sp.add_argument("--sign", choices=("+", "-"), help="constituent of a split A_n character")

    sp = add("virtual", cmd_virtual, "V^lambda[e1,...,eu] by signed hook additions")
    sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    sp.add_argument("--hooks", type=int_list, required=True, help="hook sizes, e.g. 3,3")

    sp = add("verify", cmd_verify, "run a verification suite")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.add_argument("--n", type=n_range, help="n values: A..B, N or N,M,...")
    sp.add_argument("--max-n", type=nonneg_int)
    sp.add_argument("--max-m", type=nonneg_int)
    sp.add_argument("--max-e", type=pos_int)
    sp.add_argument("--p", type=prime_arg)
    sp.add_argument("--primes", type=prime_list)
    sp.add_argument("--group", choices=("Sn", "An"))
    sp.add_argument("--cap", type=pos_int, help="largest Sylow order for brute force")
    sp.add_argument("--timing", action="store_true", help="include wall time in the report")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sylowbranch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        print(f"sylowbranch: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
