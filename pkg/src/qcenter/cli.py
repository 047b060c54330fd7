"""``qcenter`` command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error or malformed
literal, 3 cutoff too small for the requested answer.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__, rootdata
from .center import (
    CentralCharData, bullet_orbit, check_level, compatibility_witness, delta0, is_exceptional,
    is_regular, point_order, q0_index, xi_har,
)
from .charring import TorusPoint, c_basis, format_pchar, parse_pchar, pchar_to_json
from .drinfeld import kappa, serre_suite, tau
from .induction import verify_main_identity_truncated
from .repchar import freudenthal, tensor_decompose, weyl_dim, weyl_euler
from .ring import parse_scalar
from .rootdata import format_weight, parse_weight, root_lattice_ball
from .springer import parse_partition, springer_total_cohomology_dim
from .uq import K, UElement, parse_word
from .verma import TruncationError, build_weyl_module, check_relations, theta_pairing, trace_against

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_TRUNCATED = 0, 1, 2, 3
SCHEMA = 1


class UsageError(ValueError):
    pass


class Output:
    """Collects one report and renders it as text, json or csv."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data: dict = {}
        self.lines: list = []
        self.header: list | None = None
        self.rows: list = []

    def table(self, header, rows):
        self.header = list(header)
        self.rows = [list(r) for r in rows]

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps({"schema": SCHEMA, **self.data}, indent=2, sort_keys=True) + "\n"
        if self.fmt == "csv":
            if self.header is None:
                raise UsageError("this command has no tabular output; use --format text or json")
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue()
        return "\n".join(self.lines) + "\n"


# -- literal parsing ---------------------------------------------------------

def _datum(args):
    if not args.type:
        raise UsageError("--type is required")
    return rootdata.build(args.type)


def _weight(rd, text, dominant=False):
    if text is None:
        raise UsageError("--weight is required")
    lam = parse_weight(text, rd.rank)
    if dominant and not rd.is_dominant(lam):
        raise UsageError(f"weight {format_weight(lam)} is not dominant")
    return lam


def _torus(rd, text, level=None):
    if text is None:
        raise UsageError("a torus point literal is required")
    vals = [parse_scalar(v, level) for v in text.split(",")]
    if len(vals) != rd.rank:
        raise UsageError(f"torus point needs {rd.rank} comma-separated values")
    return TorusPoint(vals)


def _word(rd, text, name):
    if text is None:
        raise UsageError(f"--{name} is required")
    return UElement.word(*parse_word(text, rd.rank))


def _wstr(lam):
    return format_weight(lam)


# -- commands ----------------------------------------------------------------

def cmd_root_info(args, out):
    rd = _datum(args)
    out.data = {
        "type": rd.label,
        "cartan": [list(r) for r in rd.cartan],
        "d": list(rd.d),
        "positive_roots": [list(b) for b in rd.positive_roots],
        "rho": list(rd.rho),
        "weyl_order": rd.weyl_order(),
        "fundamental_group_order": rootdata.fundamental_group_order(rd),
    }
    out.table(["root", "weight"], [[_wstr(b), _wstr(rd.root_to_weight(b))] for b in rd.positive_roots])
    out.lines = [
        f"type {rd.label}",
        "cartan " + "; ".join(" ".join(str(x) for x in r) for r in rd.cartan),
        "d " + " ".join(str(x) for x in rd.d),
        f"positive roots ({len(rd.positive_roots)}): " + " ".join(f"[{_wstr(b)}]" for b in rd.positive_roots),
        f"rho [{_wstr(rd.rho)}]",
        f"|W| = {rd.weyl_order()}",
        f"|P/Q| = {rootdata.fundamental_group_order(rd)}",
    ]
    return EXIT_OK


def cmd_char(args, out):
    rd = _datum(args)
    lam = _weight(rd, args.weight, dominant=True)
    ch = freudenthal(rd, lam).character()
    out.data = {"type": rd.label, "weight": list(lam), "character": pchar_to_json(ch)}
    out.table(["weight", "coeff"], [[_wstr(mu), str(c)] for mu, c in sorted(ch.terms.items(), reverse=True)])
    out.lines = [format_pchar(ch)]
    return EXIT_OK


def cmd_freudenthal(args, out):
    rd = _datum(args)
    lam = _weight(rd, args.weight, dominant=True)
    table = freudenthal(rd, lam)
    rows = sorted(table.mults.items(), reverse=True)
    out.data = {
        "type": rd.label, "weight": list(lam), "dim": table.dim(), "weyl_dim": weyl_dim(rd, lam),
        "mults": [{"weight": list(mu), "mult": m} for mu, m in rows],
    }
    out.table([f"c{i + 1}" for i in range(rd.rank)] + ["mult"], [list(mu) + [m] for mu, m in rows])
    out.lines = [f"{_wstr(mu)}: {m}" for mu, m in rows] + [f"dim {table.dim()} (Weyl formula {weyl_dim(rd, lam)})"]
    if args.figure:
        from .plotting import weight_diagram

        weight_diagram(rd, table, args.figure)
        out.lines.append(f"figure written to {args.figure}")
    return EXIT_OK if table.dim() == weyl_dim(rd, lam) else EXIT_MISMATCH


def cmd_tensor(args, out):
    rd = _datum(args)
    lam = _weight(rd, args.weight, dominant=True)
    mu = _weight(rd, args.weight2, dominant=True)
    dec = sorted(tensor_decompose(rd, lam, mu).items(), reverse=True)
    total = sum(c * weyl_dim(rd, nu) for nu, c in dec)
    expected = weyl_dim(rd, lam) * weyl_dim(rd, mu)
    out.data = {"type": rd.label, "left": list(lam), "right": list(mu),
                "summands": [{"weight": list(nu), "mult": c} for nu, c in dec], "dim": total}
    out.table([f"c{i + 1}" for i in range(rd.rank)] + ["mult"], [list(nu) + [c] for nu, c in dec])
    out.lines = [f"{_wstr(nu)}: {c}" for nu, c in dec] + [f"dim {total} = {expected}"]
    return EXIT_OK if total == expected else EXIT_MISMATCH


def cmd_euler(args, out):
    rd = _datum(args)
    mu = _weight(rd, args.weight)
    ch = weyl_euler(rd, mu)
    out.data = {"type": rd.label, "weight": list(mu),
                "terms": [{"weight": list(nu), "coeff": c} for nu, c in ch.coeffs]}
    out.table([f"c{i + 1}" for i in range(rd.rank)] + ["coeff"], [list(nu) + [c] for nu, c in ch.coeffs])
    out.lines = [str(ch)]
    return EXIT_OK


def cmd_tau(args, out):
    rd = _datum(args)
    x = _word(rd, args.x, "x")
    y = _word(rd, args.y, "y")
    a = tau(rd, x, y, "y")
    b = tau(rd, x, y, "x")
    out.data = {"type": rd.label, "x": args.x, "y": args.y, "value": str(a), "orders_agree": a == b}
    out.lines = [str(a)] + ([] if a == b else [f"recursion orders disagree: {b}"])
    return EXIT_OK if a == b else EXIT_MISMATCH


def cmd_serre_check(args, out):
    rd = _datum(args)
    sides = ("plus", "minus") if args.side == "both" else (args.side,)
    rows = [(i + 1, j + 1, side, _wstr(g), ok) for i, j, side, g, ok in serre_suite(rd, args.height, sides)]
    bad = [r for r in rows if not r[4]]
    out.data = {"type": rd.label, "max_height": args.height, "checked": len(rows), "failures": len(bad),
                "certificates": [{"i": i, "j": j, "side": s, "grading": g, "ok": ok} for i, j, s, g, ok in rows]}
    out.table(["i", "j", "side", "grading", "ok"], [[i, j, s, g, int(ok)] for i, j, s, g, ok in rows])
    out.lines = [f"{'ok  ' if ok else 'FAIL'} ({i},{j}) {s} grading [{g}]" for i, j, s, g, ok in rows]
    out.lines.append(f"{len(rows) - len(bad)}/{len(rows)} certificates vanish")
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_kappa(args, out):
    rd = _datum(args)
    v = _word(rd, args.v, "v")
    u = _word(rd, args.u, "u")
    val = kappa(rd, v, u)
    out.data = {"type": rd.label, "v": args.v, "u": args.u, "value": str(val)}
    out.lines = [str(val)]
    return EXIT_OK


def cmd_c_basis(args, out):
    rd = _datum(args)
    lam = _weight(rd, args.weight, dominant=True)
    c = c_basis(rd, lam)
    out.data = {"type": rd.label, "weight": list(lam), "c": pchar_to_json(c)}
    out.table(["weight", "coeff"], [[_wstr(mu), str(v)] for mu, v in sorted(c.terms.items(), reverse=True)])
    out.lines = [format_pchar(c)]
    return EXIT_OK


def cmd_xi_har(args, out):
    rd = _datum(args)
    t = _torus(rd, args.t)
    if args.char:
        f = parse_pchar(args.char, "chi")
    else:
        f = c_basis(rd, _weight(rd, args.weight, dominant=True))
    val = xi_har(rd, t, f)
    out.data = {"type": rd.label, "t": args.t, "function": format_pchar(f), "value": str(val)}
    out.lines = [str(val)]
    return EXIT_OK


def cmd_regular(args, out):
    rd = _datum(args)
    t = _torus(rd, args.t)
    orbit = bullet_orbit(rd, t)
    reg = is_regular(rd, t)
    out.data = {"type": rd.label, "t": args.t, "orbit_size": len(orbit), "weyl_order": rd.weyl_order(),
                "regular": reg}
    out.lines = [f"{'regular' if reg else 'not regular'}: orbit size {len(orbit)} of {rd.weyl_order()}"]
    return EXIT_OK


def _h0(rd, args):
    if args.h0 is None:
        return None
    if args.zeta_order is None:
        raise UsageError("--h0 needs --zeta-order (the order of the root of unity zeta)")
    return _torus(rd, args.h0, args.zeta_order)


def cmd_check_level(args, out):
    rd = _datum(args)
    rep = check_level(rd, args.ell, _h0(rd, args))
    out.data = rep.to_json()
    out.table(["condition", "holds"], [[k, "" if getattr(rep, k) is None else int(getattr(rep, k))]
                                       for k in ("a1", "a2", "a3", "a4", "a5")])
    verdict = "accept" if rep.verdict else "reject"
    out.lines = [verdict + (" (" + ", ".join(rep.reasons) + ")" if rep.reasons else "")]
    if rep.a4 is None:
        out.lines.append("a4 not checked (no h0 given)")
    return EXIT_OK


def cmd_exceptional(args, out):
    rd = _datum(args)
    h0 = _h0(rd, args)
    if h0 is None:
        raise UsageError("--h0 is required")
    roots = delta0(rd, h0)
    index = q0_index(rd, h0)
    exc = is_exceptional(rd, h0)
    out.data = {"type": rd.label, "h0": args.h0, "zeta_order": args.zeta_order, "exceptional": exc,
                "delta0": [list(b) for b in roots], "q0_index": index, "order": point_order(h0)}
    out.lines = [
        "exceptional" if exc else "not exceptional",
        f"roots with h0 = 1: {len(roots)}",
        f"|Q/Q0| = {index if index else 'infinite'}",
    ]
    return EXIT_OK


def cmd_compatible(args, out):
    rd = _datum(args)
    h0 = _h0(rd, args)
    if h0 is None:
        raise UsageError("--h0 is required")
    t = _torus(rd, args.t, args.zeta_order)
    data = CentralCharData.make(rd, t, h0, args.ell)
    w = compatibility_witness(rd, t, args.ell, h0)
    out.data = {"type": rd.label, "t": args.t, "h0": args.h0, "ell": args.ell, "compatible": w is not None,
                "witness": None if w is None else list(w.word), "coefficient_level": data.coefficient_level()}
    out.lines = [f"compatible via w = {w}" if w is not None else "not compatible"]
    return EXIT_OK


def cmd_verify_theta(args, out):
    rd = _datum(args)
    lam = _weight(rd, args.weight, dominant=True)
    mod = build_weyl_module(rd, lam)
    rel = check_relations(mod)
    c = c_basis(rd, lam, mod.dims())
    rows = []
    for mu in root_lattice_ball(rd, args.probe_height):
        u = UElement.word(K(mu))
        lhs = trace_against(mod, u)
        rhs = theta_pairing(rd, c, u)
        rows.append((mu, lhs, rhs, lhs == rhs))
    ok = all(r[3] for r in rows) and all(rel.values())
    out.data = {"type": rd.label, "weight": list(lam), "relations": rel,
                "probes": [{"mu": list(mu), "trace": str(a), "pairing": str(b), "ok": e} for mu, a, b, e in rows],
                "ok": ok}
    out.table(["mu", "trace", "pairing", "ok"], [[_wstr(mu), str(a), str(b), int(e)] for mu, a, b, e in rows])
    out.lines = [f"{'ok  ' if e else 'FAIL'} k[{_wstr(mu)}]: {a}" for mu, a, b, e in rows]
    out.lines.append("relations " + ("hold" if all(rel.values()) else "FAIL: " + ", ".join(k for k, v in rel.items() if not v)))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify_main(args, out):
    rd = _datum(args)
    if args.cutoff is None or args.cutoff < 0:
        raise UsageError("--cutoff must be a nonnegative integer")
    rep = verify_main_identity_truncated(rd, args.cutoff)
    rows = list(rep.rows())
    if args.weight is not None:
        lam = _weight(rd, args.weight, dominant=True)
        rows = [r for r in rows if r[0] == lam]
        if not rows:
            raise TruncationError(f"ch[{_wstr(lam)}] is not complete at cutoff {args.cutoff}")
    ok = all(r[3] for r in rows)
    out.data = {"type": rd.label, "cutoff": args.cutoff, "ok": ok,
                "rows": [{"weight": list(lam), "lhs": a, "rhs": b, "equal": e} for lam, a, b, e in rows]}
    out.table([f"c{i + 1}" for i in range(rd.rank)] + ["lhs", "rhs", "equal"],
              [list(lam) + [a, b, int(e)] for lam, a, b, e in rows])
    out.lines = [f"{'ok  ' if e else 'FAIL'} [{_wstr(lam)}] lhs {a} rhs {b}" for lam, a, b, e in rows]
    out.lines.append(f"{sum(r[3] for r in rows)}/{len(rows)} complete weights agree")
    if args.figure:
        from .plotting import main_identity_figure

        main_identity_figure(rep, args.figure)
        out.lines.append(f"figure written to {args.figure}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_springer_dim(args, out):
    if args.partition is None:
        raise UsageError("--partition is required")
    p = parse_partition(args.partition)
    if args.type is not None:
        rd = rootdata.build(args.type)
        if rd.kind != "A":
            raise UsageError(f"unsupported: Springer dimensions are only computed in type A, not {rd.label}")
        if p.n != rd.rank + 1:
            raise UsageError(f"partition of {p.n} does not match {rd.label}")
    d = springer_total_cohomology_dim(p)
    out.data = {"partition": list(p), "dim": d}
    out.table(["partition", "dim"], [[",".join(str(x) for x in p), d]])
    out.lines = [str(d)]
    return EXIT_OK


def cmd_selftest(args, out):
    from .selftest import run

    results = run(args.seed)
    ok = all(r[1] for r in results)
    out.data = {"seed": args.seed, "ok": ok,
                "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in results]}
    out.table(["check", "ok", "detail"], [[n, int(o), d] for n, o, d in results])
    out.lines = [f"selftest seed={args.seed}"] + [f"{'PASS' if o else 'FAIL'} {n}: {d}" for n, o, d in results]
    out.lines.append(f"{sum(r[1] for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------

COMMANDS = {
    "root-info": (cmd_root_info, "Cartan data, positive roots, rho, |W|, |P/Q|.",
                  "csv columns: root (simple-root coords), weight (fundamental coords)"),
    "char": (cmd_char, "Character of the Weyl module as an e-basis term list.", "csv columns: weight, coeff"),
    "freudenthal": (cmd_freudenthal, "Weight multiplicities by Freudenthal's formula.",
                    "csv columns: c1..cr (weight coords), mult"),
    "tensor": (cmd_tensor, "Decompose a tensor product of two Weyl modules.",
               "csv columns: c1..cr (highest weight), mult"),
    "euler": (cmd_euler, "Euler characteristic of line-bundle induction (dot action).",
              "csv columns: c1..cr (highest weight), coeff"),
    "tau": (cmd_tau, "Drinfeld pairing of a plus word with a minus word.", None),
    "serre-check": (cmd_serre_check, "Certificates that tau kills padded Serre elements.",
                    "csv columns: i, j, side, grading, ok"),
    "kappa": (cmd_kappa, "Pairing between the locally finite and the Lusztig side.", None),
    "c-basis": (cmd_c_basis, "The invariant function c(lambda) in the chi-reading.", "csv columns: weight, coeff"),
    "xi-har": (cmd_xi_har, "Evaluate an invariant function at a torus point.", None),
    "regular": (cmd_regular, "Is a torus point regular for the twisted action?", None),
    "check-level": (cmd_check_level, "Root-of-unity level conditions a1..a5.", "csv columns: condition, holds"),
    "exceptional": (cmd_exceptional, "Is h0 exceptional (full-rank root subsystem)?", None),
    "compatible": (cmd_compatible, "Is t^ell a Weyl conjugate of h0?", None),
    "verify-theta": (cmd_verify_theta, "Quantum trace against k_mu equals the pairing with c(lambda).",
                     "csv columns: mu, trace, pairing, ok"),
    "verify-main": (cmd_verify_main, "Truncated comparison of zero-weight multiplicities with induction.",
                    "csv columns: c1..cr (highest weight), lhs, rhs, equal"),
    "springer-dim": (cmd_springer_dim, "Total cohomology dimension of a type A Springer fiber.",
                     "csv columns: partition, dim"),
    "selftest": (cmd_selftest, "Run the seeded invariant suite.", "csv columns: check, ok, detail"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qcenter", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"qcenter {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, (fn, help_text, csv_help) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text, epilog=csv_help)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", "--emit", dest="format", choices=("text", "json", "csv"), default="text")
        if name == "springer-dim":
            sp.add_argument("--type", help="optional; only type A is supported")
        elif name != "selftest":
            sp.add_argument("--type", help="root system, e.g. A2, B2, G2")
        if name in ("char", "freudenthal", "tensor", "euler", "c-basis", "xi-har", "verify-theta", "verify-main"):
            sp.add_argument("--weight", help="comma-separated fundamental-weight coordinates")
        if name == "tensor":
            sp.add_argument("--weight2", help="second highest weight")
        if name in ("freudenthal", "verify-main"):
            sp.add_argument("--figure", help="write a matplotlib figure to this path")
        if name == "tau":
            sp.add_argument("--x", help="plus-side word, e.g. 'E1 K[1,0] E2'")
            sp.add_argument("--y", help="minus-side word, e.g. 'F2 F1'")
        if name == "kappa":
            sp.add_argument("--v", help="word on the Lusztig side")
            sp.add_argument("--u", help="word on the locally finite side")
        if name == "serre-check":
            sp.add_argument("--height", type=int, default=5, help="largest total grading height")
            sp.add_argument("--side", choices=("plus", "minus", "both"), default="both")
        if name in ("xi-har", "regular", "compatible"):
            sp.add_argument("--t", help="torus point: one scalar per fundamental weight, comma-separated")
        if name == "xi-har":
            sp.add_argument("--char", help="chi-reading literal instead of c(weight)")
        if name in ("check-level", "compatible"):
            sp.add_argument("--ell", type=int, required=True, help="level (order of the root of unity)")
        if name in ("check-level", "exceptional", "compatible"):
            sp.add_argument("--h0", help="finite-order torus point, scalars are polynomials in zeta")
            sp.add_argument("--zeta-order", type=int, help="order of zeta used in --h0 and --t")
        if name == "verify-theta":
            sp.add_argument("--probe-height", type=int, default=3, help="probes k_mu with mu in Q of this height")
        if name == "verify-main":
            sp.add_argument("--cutoff", type=int, help="principal-height cutoff N")
        if name == "springer-dim":
            sp.add_argument("--partition", help="Jordan type, e.g. 2,1")
        if name == "selftest":
            sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    out = Output(args.format)
    try:
        code = args.func(args, out)
        text = out.render()
    except TruncationError as exc:
        sys.stderr.write(f"qcenter: truncation: {exc}\n")
        return EXIT_TRUNCATED
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"qcenter: error: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
