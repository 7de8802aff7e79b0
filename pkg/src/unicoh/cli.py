"""Command-line front end: batch computation, verification runs, table export.

Partitions are written as comma-separated descending integers (empty string
for the empty partition), bipartitions as two partitions separated by a
slash, e.g. ``3,1,1/4,2``.  Exit status: 0 on success, 2 on bad arguments,
1 when a verification run reports a failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from math import factorial

from . import deligne_lusztig as dl
from . import harish_chandra as hc
from . import weyl_characters as wc
from .errors import RankCapError, VerificationError
from .partitions import (
    Bipartition,
    Partition,
    bipartitions_of,
    core_quotient,
    from_core_quotient,
    staircase,
)
from .unipotent import (
    SymbolLabel,
    cuspidal_partition,
    degree_gl,
    degree_u,
    from_symbol,
    hc_series,
    to_symbol,
)


@dataclass
class RunConfig:
    """Soft per-subsystem rank caps and output settings."""

    max_n: int = 8
    max_a: int = 5
    max_theta: int = 8
    max_k: int = 8
    fmt: str = "table"
    out: str | None = None
    quiet: bool = False
    verbose: bool = False


DEFAULTS = RunConfig()


class CliError(Exception):
    """Bad arguments (exit status 2)."""


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "[]"):
        return Partition()
    try:
        parts = [int(x) for x in text.split(",") if x.strip() != ""]
        return Partition(parts)
    except ValueError as exc:
        raise CliError(f"malformed partition {text!r}: {exc}") from exc


def parse_bipartition(text: str) -> Bipartition:
    if "/" not in text:
        raise CliError(f"malformed bipartition {text!r}: expected 'first/second'")
    first, _, second = text.partition("/")
    return Bipartition(parse_partition(first), parse_partition(second))


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _fmt_labels(reps: hc.RepMultiset) -> str:
    pieces = []
    for label in reps.sorted_labels():
        m = reps.multiplicity(label)
        body = _compact(list(from_symbol(label)))
        pieces.append(body if m == 1 else f"{m}*{body}")
    return " + ".join(pieces) if pieces else "0"


@dataclass
class Document:
    """One rendered result: pretty text, JSON object, optional CSV rows."""

    text: str
    payload: object
    rows: list[list] | None = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2)
        if fmt == "csv":
            rows = self.rows if self.rows is not None else [[self.text]]
            buf = io.StringIO()
            csv.writer(buf).writerows(rows)
            return buf.getvalue().rstrip("\n")
        return self.text


def _check_cap(value: int, cap: int, default_cap: int, flag: str, what: str, cfg: RunConfig):
    if value > cap:
        raise CliError(
            f"{what} {value} exceeds the cap {cap}; raise it with {flag} if you accept the runtime"
        )
    if cap > default_cap and not cfg.quiet:
        print(
            f"warning: {flag} raised above the default {default_cap}; expect longer runtimes",
            file=sys.stderr,
        )


# -- subcommand handlers -----------------------------------------------------


def cmd_char_sym(args, cfg: RunConfig) -> Document:
    lam, klass = parse_partition(args.lam), parse_partition(args.klass)
    if lam.size != klass.size:
        raise CliError(f"|lambda| = {lam.size} but |class| = {klass.size}")
    value = wc.chi_sym(lam, klass)
    return Document(
        text=str(value),
        payload={"lambda": list(lam), "class": list(klass), "value": str(value)},
    )


def cmd_char_b(args, cfg: RunConfig) -> Document:
    label, klass = parse_bipartition(args.label), parse_bipartition(args.klass)
    if label.size != klass.size:
        raise CliError(f"|label| = {label.size} but |class| = {klass.size}")
    value = wc.chi_typeb(label, klass)
    return Document(
        text=str(value),
        payload={
            "label": [list(label.first), list(label.second)],
            "class": [list(klass.first), list(klass.second)],
            "value": str(value),
        },
    )


def cmd_table(args, cfg: RunConfig) -> Document:
    if args.group == "sym":
        if args.n is None:
            raise CliError("--n is required for --group sym")
        _check_cap(args.n, cfg.max_n, DEFAULTS.max_n, "--max-n", "symmetric rank", cfg)
        table = wc.character_table_sym(args.n)
    else:
        if args.a is None:
            raise CliError("--a is required for --group b")
        _check_cap(args.a, cfg.max_a, DEFAULTS.max_a, "--max-a", "type-B rank", cfg)
        table = wc.character_table_typeb(args.a)

    def show(item) -> str:
        if isinstance(item, Bipartition):
            return _compact([list(item.first), list(item.second)])
        return _compact(list(item))

    lines = [f"character table {table.group} (order {table.group_order})"]
    lines.append("classes:     " + "  ".join(show(c) for c in table.classes))
    lines.append("class sizes: " + "  ".join(str(s) for s in table.class_sizes))
    for label, row in zip(table.labels, table.values):
        lines.append(f"{show(label)}: " + "  ".join(str(v) for v in row))
    rows: list[list] = [["label"] + [show(c) for c in table.classes]]
    rows.append(["class_size"] + [str(s) for s in table.class_sizes])
    for label, row in zip(table.labels, table.values):
        rows.append([show(label)] + [str(v) for v in row])
    return Document(text="\n".join(lines), payload=table.to_json(), rows=rows)


def cmd_degree(args, cfg: RunConfig) -> Document:
    lam = parse_partition(args.lam)
    poly = degree_u(lam) if args.group == "u" else degree_gl(lam)
    payload = {"group": args.group, "partition": list(lam), "degree": poly.to_json()}
    text = str(poly)
    if args.at is not None:
        value = poly(args.at)
        payload["at"] = {"q": args.at, "value": str(value)}
        text += f"\nat q={args.at}: {value}"
    return Document(text=text, payload=payload)


def cmd_two_core(args, cfg: RunConfig) -> Document:
    lam = parse_partition(args.lam)
    cq = core_quotient(lam)
    return Document(
        text=f"core t={cq.core_index}, core partition {_compact(list(staircase(cq.core_index)))}",
        payload={"lambda": list(lam), "t": cq.core_index, "core": list(staircase(cq.core_index))},
    )


def cmd_two_quotient(args, cfg: RunConfig) -> Document:
    lam = parse_partition(args.lam)
    cq = core_quotient(lam)
    quotient = [list(cq.quotient.first), list(cq.quotient.second)]
    return Document(
        text=f"core t={cq.core_index}, quotient {_compact(quotient)}",
        payload={"lambda": list(lam), "t": cq.core_index, "quotient": quotient},
    )


def cmd_reconstruct(args, cfg: RunConfig) -> Document:
    quotient = parse_bipartition(args.quotient)
    if args.t < 0:
        raise CliError("--t must be nonnegative")
    lam = from_core_quotient(args.t, quotient)
    return Document(
        text=_compact(list(lam)),
        payload={
            "t": args.t,
            "quotient": [list(quotient.first), list(quotient.second)],
            "lambda": list(lam),
        },
    )


def cmd_label(args, cfg: RunConfig) -> Document:
    if args.lam is not None:
        lam = parse_partition(args.lam)
        sym = to_symbol(lam)
        text = f"symbol t={sym.t}, alpha {_compact(list(sym.alpha))}, beta {_compact(list(sym.beta))}"
        return Document(text=text, payload={"partition": list(lam), "symbol": sym.to_json()})
    if args.t is None or args.alpha is None or args.beta is None:
        raise CliError("provide either --lambda, or all of --t, --alpha, --beta")
    sym = SymbolLabel(args.t, parse_partition(args.alpha), parse_partition(args.beta))
    lam = from_symbol(sym)
    return Document(
        text=_compact(list(lam)), payload={"symbol": sym.to_json(), "partition": list(lam)}
    )


def cmd_series(args, cfg: RunConfig) -> Document:
    lam = parse_partition(args.lam)
    series = hc_series(lam)
    cuspidal = cuspidal_partition(series.n)
    text = (
        f"t={series.t}, n={series.n}, weyl rank a={series.weyl_rank}, "
        f"principal={series.principal}, cuspidal={series.cuspidal}"
    )
    return Document(
        text=text,
        payload={
            "lambda": list(lam),
            "t": series.t,
            "n": series.n,
            "weyl_rank": series.weyl_rank,
            "principal": series.principal,
            "cuspidal": series.cuspidal,
            "ambient_cuspidal_label": list(cuspidal) if cuspidal is not None else None,
        },
    )


def cmd_pieri(args, cfg: RunConfig) -> Document:
    label = parse_bipartition(args.label)
    if (args.add is None) == (args.remove is None):
        raise CliError("exactly one of --add or --remove is required")
    if args.add is not None:
        outs = hc.pieri_induce(label, args.add)
        op = {"add": args.add}
    else:
        if args.remove > label.size:
            raise CliError(f"cannot remove {args.remove} boxes from a bipartition of {label.size}")
        outs = hc.pieri_restrict(label, args.remove)
        op = {"remove": args.remove}
    shown = [[list(b.first), list(b.second)] for b in outs]
    return Document(
        text="\n".join(_compact(b) for b in shown),
        payload={"label": [list(label.first), list(label.second)], **op, "result": shown},
        rows=[[_compact(b)] for b in shown],
    )


def cmd_induce(args, cfg: RunConfig) -> Document:
    sym = SymbolLabel(args.t, parse_partition(args.alpha), parse_partition(args.beta))
    gl_ranks = tuple(int(x) for x in args.gl.split(",") if x.strip() != "") if args.gl else ()
    if any(r < 0 for r in gl_ranks):
        raise CliError("GL ranks must be nonnegative")
    shape = hc.LeviShape(unitary_rank=sym.rank, gl_ranks=gl_ranks)
    label = hc.LeviUnipotentLabel(sym, tuple(Partition((r,) if r else ()) for r in gl_ranks))
    result = hc.hc_induce(shape, label)
    return Document(
        text=f"U_{shape.n}(q) constituents: {_fmt_labels(result)}",
        payload={
            "levi": {"unitary_rank": shape.unitary_rank, "gl_ranks": list(gl_ranks)},
            "label": sym.to_json(),
            "n": shape.n,
            "result": result.to_json(),
        },
        rows=[
            [out.t, _compact(list(out.alpha)), _compact(list(out.beta)), result.multiplicity(out)]
            for out in result.sorted_labels()
        ],
    )


def _cohomology_document(table: dl.CohomologyTable) -> Document:
    lines = [f"variety: {table.variety}"]
    rows: list[list] = [["degree", "frobenius_exponent", "constituents"]]
    for entry in table.entries:
        shown = _fmt_labels(entry.constituents)
        lines.append(f"H^{entry.degree}  (-q)^{entry.frobenius_exponent}  {shown}")
        rows.append([entry.degree, entry.frobenius_exponent, shown])
    return Document(text="\n".join(lines), payload=table.to_json(), rows=rows)


def cmd_coxeter(args, cfg: RunConfig) -> Document:
    _check_cap(args.k, cfg.max_k, DEFAULTS.max_k, "--max-k", "Coxeter rank k", cfg)
    return _cohomology_document(dl.coxeter_cohomology(args.k))


def cmd_stratum(args, cfg: RunConfig) -> Document:
    _check_cap(args.theta, cfg.max_theta, DEFAULTS.max_theta, "--max-theta", "theta", cfg)
    if args.method == "closed":
        table = dl.closed_stratum_cohomology(args.theta)
    else:
        table = dl.stratum_cohomology(args.theta)
    return _cohomology_document(table)


def _foundation_checks(max_rank: int = 3) -> list[dl.CheckResult]:
    """Cross-checks of the character and induction layers at small rank."""
    checks: list[dl.CheckResult] = []

    for n in range(1, max_rank + 2):
        table = wc.character_table_sym(n)
        order = table.group_order
        bad = order != factorial(n)
        for i in range(len(table.labels)):
            for j in range(i, len(table.labels)):
                ip = sum(
                    s * table.values[i][k] * table.values[j][k]
                    for k, s in enumerate(table.class_sizes)
                )
                if ip != (order if i == j else 0):
                    bad = True
        checks.append(dl.CheckResult(f"character-orthogonality (S_{n})", not bad))

    for a in range(1, max_rank + 1):
        table = wc.character_table_typeb(a)
        order = table.group_order
        bad = order != 2**a * factorial(a)
        for i in range(len(table.labels)):
            for j in range(i, len(table.labels)):
                ip = sum(
                    s * table.values[i][k] * table.values[j][k]
                    for k, s in enumerate(table.class_sizes)
                )
                if ip != (order if i == j else 0):
                    bad = True
        checks.append(dl.CheckResult(f"character-orthogonality (W_{a})", not bad))

    for a in range(max_rank + 1):
        brute = wc.SignedPermutationGroup(a).class_sizes()
        bad = any(wc.typeb_class_size(k) != brute.get(k, 0) for k in bipartitions_of(a))
        checks.append(dl.CheckResult(f"class-sizes-vs-brute-force (W_{a})", not bad))

    bad_pairs = []
    for a in range(max_rank + 1):
        for r in range(a + 1):
            s = a - r
            for phi in bipartitions_of(r):
                outs = hc.pieri_induce(phi, s)
                for chi in bipartitions_of(a):
                    expected = outs.count(chi)
                    try:
                        got = hc.induction_multiplicity_oracle(
                            r, s, phi, Partition((s,) if s else ()), chi
                        )
                    except ArithmeticError as exc:
                        bad_pairs.append(f"r={r},s={s}: {exc}")
                        continue
                    if expected != got:
                        bad_pairs.append(f"r={r},s={s},{phi}->{chi}")
    checks.append(
        dl.CheckResult(
            f"pieri-vs-reciprocity-oracle (rank<={max_rank})",
            not bad_pairs,
            "; ".join(bad_pairs[:5]),
        )
    )
    return checks


def cmd_verify(args, cfg: RunConfig) -> tuple[Document, int]:
    checks: list[dl.CheckResult] = []
    if args.theta is not None:
        _check_cap(args.theta, cfg.max_theta, DEFAULTS.max_theta, "--max-theta", "theta", cfg)
        checks.extend(dl.verify_stratum(args.theta).checks)
    if args.k is not None:
        _check_cap(args.k, cfg.max_k, DEFAULTS.max_k, "--max-k", "k", cfg)
        checks.extend(dl.coxeter_dimension_checks(args.k))
        if args.k >= 1:
            checks.extend(dl.coxeter_restriction_checks(args.k))
    if args.theta is None and args.k is None:
        sweep_theta = min(cfg.max_theta, 6)
        sweep_k = min(cfg.max_k, 6)
        checks.extend(_foundation_checks())
        for k in range(sweep_k + 1):
            checks.extend(dl.coxeter_dimension_checks(k))
            if k >= 1:
                checks.extend(dl.coxeter_restriction_checks(k))
        for theta in range(sweep_theta + 1):
            checks.extend(dl.verify_stratum(theta).checks)

    ok = all(c.passed for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{'OK' if ok else 'FAILED'}: {sum(c.passed for c in checks)}/{len(checks)} checks passed")
    doc = Document(
        text="\n".join(lines),
        payload={
            "ok": ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "details": c.details} for c in checks
            ],
        },
        rows=[["status", "check"]] + [["PASS" if c.passed else "FAIL", c.name] for c in checks],
    )
    return doc, 0 if ok else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unicoh",
        description="Exact unipotent combinatorics of finite unitary groups "
        "and cohomology of closed Bruhat-Tits strata.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", metavar="PATH", default=None, help="write output to a file")
    common.add_argument("--max-n", type=int, default=DEFAULTS.max_n)
    common.add_argument("--max-a", type=int, default=DEFAULTS.max_a)
    common.add_argument("--max-theta", type=int, default=DEFAULTS.max_theta)
    common.add_argument("--max-k", type=int, default=DEFAULTS.max_k)
    common.add_argument("-q", "--quiet", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char-sym", parents=[common], help="symmetric group character value")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.set_defaults(handler=cmd_char_sym)

    p = sub.add_parser("char-b", parents=[common], help="hyperoctahedral character value")
    p.add_argument("--label", required=True, help="bipartition alpha/beta")
    p.add_argument("--class", dest="klass", required=True, help="bipartition gamma/theta")
    p.set_defaults(handler=cmd_char_b)

    p = sub.add_parser("table", parents=[common], help="full character table")
    p.add_argument("--group", choices=("sym", "b"), required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("degree", parents=[common], help="generic degree polynomial")
    p.add_argument("--group", choices=("gl", "u"), default="u")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--at", type=int, default=None, help="also evaluate at this prime power")
    p.set_defaults(handler=cmd_degree)

    p = sub.add_parser("two-core", parents=[common], help="2-core staircase index")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(handler=cmd_two_core)

    p = sub.add_parser("two-quotient", parents=[common], help="2-core and 2-quotient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(handler=cmd_two_quotient)

    p = sub.add_parser("reconstruct", parents=[common], help="partition from core and quotient")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--quotient", required=True, help="bipartition first/second")
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("label", parents=[common], help="translate partition <-> symbol labels")
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.set_defaults(handler=cmd_label)

    p = sub.add_parser("series", parents=[common], help="Harish-Chandra series membership")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("pieri", parents=[common], help="Pieri induction or restriction")
    p.add_argument("--label", required=True, help="bipartition alpha/beta")
    p.add_argument("--add", type=int, default=None)
    p.add_argument("--remove", type=int, default=None)
    p.set_defaults(handler=cmd_pieri)

    p = sub.add_parser("induce", parents=[common], help="Harish-Chandra induction to U_n(q)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gl", default="", help="comma-separated GL block ranks (one-row labels)")
    p.set_defaults(handler=cmd_induce)

    p = sub.add_parser("coxeter", parents=[common], help="Coxeter variety cohomology table")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_coxeter)

    p = sub.add_parser("stratum", parents=[common], help="closed stratum cohomology table")
    p.add_argument("--theta", type=int, required=True)
    p.add_argument("--method", choices=("spectral", "closed"), default="spectral")
    p.set_defaults(handler=cmd_stratum)

    p = sub.add_parser("verify", parents=[common], help="consistency verification run")
    p.add_argument("--theta", type=int, default=None, help="verify one closed stratum")
    p.add_argument("--k", type=int, default=None, help="verify one Coxeter rank")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        max_n=args.max_n,
        max_a=args.max_a,
        max_theta=args.max_theta,
        max_k=args.max_k,
        fmt=args.format,
        out=args.out,
        quiet=args.quiet,
        verbose=args.verbose,
    )
    started = time.monotonic()
    try:
        result = args.handler(args, cfg)
    except (CliError, RankCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    if cfg.verbose and not cfg.quiet:
        print(f"computed in {time.monotonic() - started:.3f}s", file=sys.stderr)

    if isinstance(result, tuple):
        doc, status = result
    else:
        doc, status = result, 0
    rendered = doc.render(cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(rendered + "\n")
        if not cfg.quiet:
            print(f"wrote {cfg.out}", file=sys.stderr)
    else:
        print(rendered)
    return status


if __name__ == "__main__":
    sys.exit(main())
