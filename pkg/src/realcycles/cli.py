"""Command-line entry point: ``realcycles <command> ...``.

Exit status is 0 on success or a passing check, 1 when a check or
verification suite fails, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .cellular import builtin, chow_witt_table, cohomology, derive_I_table, variety_from_json
from .errors import ParseError, RealCyclesError
from .gersten import (
    GerstenCochain,
    cohomology_groups,
    cycle_class,
    d0,
    euler_O,
    is_coboundary,
)
from .literals import parse_curve, parse_form, parse_point, parse_section
from .quadform import FieldTag, IPowerCertificate, dsum, in_I_power, second_residue, tensor, witt_class, witt_equal
from .realspec import d_re, signature
from .verify import RANDOMIZED, SUITES, run_suite


@dataclass
class Outcome:
    status: str  # "ok", "pass", "fail" or "error"
    data: dict = field(default_factory=dict)
    text: str = ""
    tsv: str | None = None

    @property
    def code(self) -> int:
        return 0 if self.status in ("ok", "pass") else 1


def _check(ok: bool, data: dict, text: str) -> Outcome:
    return Outcome("pass" if ok else "fail", data, text)


# -- form / residue / section --------------------------------------------------------------------


def cmd_form(a) -> Outcome:
    op = a.op
    need = {"witt-equal": 2, "sum": 2, "tensor": 2, "signature": 1, "class": 1, "in-I": 1}[op]
    if len(a.forms) != need:
        raise _Usage(f"form {op} takes {need} form argument(s)")
    fs = [parse_form(s) for s in a.forms]
    if op == "witt-equal":
        eq = witt_equal(*fs)
        return _check(eq, {"equal": eq}, "equal" if eq else "not equal")
    if op in ("sum", "tensor"):
        g = (dsum if op == "sum" else tensor)(*fs)
        return Outcome("ok", {"form": str(g)}, str(g))
    f = fs[0]
    if op == "signature":
        if f.field is FieldTag.RATFUNC:
            s = signature(f)
            return Outcome("ok", {"section": str(s)}, str(s))
        from .quadform import signature_at

        v = signature_at(f)
        return Outcome("ok", {"signature": v}, str(v))
    if op == "class":
        c = witt_class(f)
        return Outcome("ok", {"class": str(c)}, str(c))
    cert = in_I_power(f, a.j)
    if isinstance(cert, IPowerCertificate):
        return Outcome("ok", {"member": True, "certificate": str(cert)}, f"in I^{a.j}: {cert}")
    return Outcome("ok", {"member": False, "reason": cert.reason, "witness": str(cert.witness)}, str(cert))


def cmd_residue(a) -> Outcome:
    f = parse_form(a.form, FieldTag.RATFUNC)
    x = parse_point(a.point)
    r = second_residue(f, x)
    return Outcome("ok", {"point": str(x), "residue": r.value}, str(r))


def cmd_section(a) -> Outcome:
    s = parse_section(a.section)
    pts = [parse_point(p) for p in a.points]
    if not pts:
        return Outcome("ok", {"section": str(s)}, str(s))
    vals = d_re(s, pts, a.twist)
    data = {"section": str(s), "d_re": [{"point": str(v.point), "value": v.value} for v in vals]}
    return Outcome("ok", data, "\n".join(str(v) for v in vals))


# -- gersten ---------------------------------------------------------------------------------


def _cochain(a) -> GerstenCochain:
    if a.form is not None and a.values:
        raise _Usage("give either --form or point=value pairs, not both")
    if a.form is not None:
        return GerstenCochain.of_form(parse_form(a.form, FieldTag.RATFUNC), a.level, a.twist)
    vals = []
    for item in a.values:
        p, sep, v = item.rpartition("=")
        if not sep:
            raise _Usage(f"expected POINT=VALUE, got {item!r}")
        try:
            n = int(v)
        except ValueError:
            raise _Usage(f"value in {item!r} is not an integer") from None
        vals.append((parse_point(p), n))
    return GerstenCochain.of_values(vals, a.level, a.twist)


def cmd_gersten(a) -> Outcome:
    X = parse_curve(a.curve)
    if a.op == "groups":
        g = cohomology_groups(X, a.twist)
        data = {"curve": str(X), "twist": a.twist, "H0": str(g[0]), "H1": str(g[1])}
        return Outcome("ok", data, f"H^0 = {g[0]}\nH^1 = {g[1]}")
    if a.op == "euler":
        if a.degree is None:
            raise _Usage("gersten euler needs --degree")
        c = euler_O(a.degree)
        cc = cycle_class(c, X)
        return Outcome("ok", {"cochain": c.to_json(), "cycle_class": str(cc)}, f"{c}\n{cc}")
    c = _cochain(a)
    if a.op == "d0":
        out = d0(c, X)
        return Outcome("ok", {"cochain": out.to_json()}, str(out))
    if a.op == "cycle-class":
        cc = cycle_class(c, X)
        return Outcome("ok", {"cycle_class": str(cc), "values": list(cc.values)}, str(cc))
    ok, pre = is_coboundary(c, X)
    data = {"coboundary": ok, "preimage": pre.to_json() if pre is not None else None}
    text = ("coboundary" if ok else "not a coboundary") + (f"\npreimage: {pre}" if pre is not None else "")
    return _check(ok, data, text)


# -- cellular ----------------------------------------------------------------------------------


def _variety(name: str):
    p = Path(name)
    if p.suffix == ".json" or p.is_file():
        try:
            text = p.read_text()
        except OSError as exc:
            raise _Usage(f"cannot read {name}: {exc}") from None
        try:
            return variety_from_json(text, p.stem)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None
    try:
        return builtin(name)
    except ValueError as exc:
        raise _Usage(str(exc)) from None


def cmd_cohomology(a) -> Outcome:
    X = _variety(a.space)
    gs = cohomology(X.spec, a.coeff)
    data = {"space": X.name, "coefficients": a.coeff, "groups": [str(g) for g in gs]}
    text = "\n".join(f"H^{i} = {g}" for i, g in enumerate(gs))
    tsv = "i\tgroup\n" + "".join(f"{i}\t{g}\n" for i, g in enumerate(gs))
    return Outcome("ok", data, text, tsv)


def cmd_table(a) -> Outcome:
    T = derive_I_table(_variety(a.space))
    tsv = T.to_tsv()
    return Outcome("ok", T.to_json(), tsv.rstrip("\n"), tsv)


def cmd_chowwitt(a) -> Outcome:
    X = _variety(a.space)
    rows = chow_witt_table(X, a.coeff)
    entries = [
        {
            "n": e.n,
            "group": str(e.group),
            "witt_part": str(e.witt_part),
            "kernel_rank": e.kernel_rank,
            "surjective": e.projection_surjective,
            "injective": e.injective,
        }
        for e in rows
    ]
    text = "\n".join(f"CW^{e['n']} = {e['group']}  (H^n(I^n) = {e['witt_part']}, rank ker d = {e['kernel_rank']})" for e in entries)
    tsv = "n\tgroup\twitt_part\tkernel_rank\n" + "".join(
        f"{e['n']}\t{e['group']}\t{e['witt_part']}\t{e['kernel_rank']}\n" for e in entries
    )
    return Outcome("ok", {"space": X.name, "coefficients": a.coeff, "entries": entries}, text, tsv)


def cmd_verify(a) -> Outcome:
    if a.suite in RANDOMIZED and a.seed is None:
        raise _Usage(f"suite {a.suite} is randomized and needs --seed")
    rep = run_suite(a.suite, a.samples, a.seed)
    return Outcome(rep.status, rep.to_json(), rep.to_text(), rep.to_tsv())


# -- plumbing ---------------------------------------------------------------------------------


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default=None)
    common.add_argument("--out", metavar="PATH")

    p = argparse.ArgumentParser(prog="realcycles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("form", parents=[common], help="Witt-group operations on diagonal forms")
    f.add_argument("op", choices=("witt-equal", "signature", "class", "in-I", "sum", "tensor"))
    f.add_argument("forms", nargs="+", metavar="FORM")
    f.add_argument("-j", type=int, default=1, help="power of I for in-I")
    f.set_defaults(func=cmd_form)

    r = sub.add_parser("residue", parents=[common], help="second residue of a form at a closed point")
    r.add_argument("form")
    r.add_argument("point")
    r.set_defaults(func=cmd_residue)

    s = sub.add_parser("section", parents=[common], help="normalize a sign section or apply d_re")
    s.add_argument("section")
    s.add_argument("points", nargs="*", metavar="POINT")
    s.add_argument("--twist", type=int, default=0)
    s.set_defaults(func=cmd_section)

    g = sub.add_parser("gersten", parents=[common], help="Gersten complexes of curves")
    g.add_argument("op", choices=("d0", "coboundary", "cycle-class", "euler", "groups"))
    g.add_argument("values", nargs="*", metavar="POINT=VALUE", help="degree-1 cochain values")
    g.add_argument("--curve", default="P1")
    g.add_argument("--form", help="degree-0 cochain given by a form")
    g.add_argument("--level", type=int, default=0)
    g.add_argument("--twist", type=int, default=0)
    g.add_argument("--degree", type=int, help="line bundle degree for euler")
    g.set_defaults(func=cmd_gersten)

    c = sub.add_parser("cohomology", parents=[common], help="cellular cohomology with Z, ZL or Z2 coefficients")
    c.add_argument("space", help="RPn, Sn, P1 or a CW JSON file")
    c.add_argument("--coeff", choices=("Z", "ZL", "Z2"), default="Z")
    c.set_defaults(func=cmd_cohomology)

    t = sub.add_parser("table", parents=[common], help="bigraded I^j cohomology table")
    t.add_argument("space")
    t.set_defaults(func=cmd_table)

    w = sub.add_parser("chowwitt", parents=[common], help="Chow-Witt groups of a cellular variety")
    w.add_argument("space")
    w.add_argument("--coeff", choices=("Z", "ZL"), default="Z")
    w.set_defaults(func=cmd_chowwitt)

    v = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--seed", type=int)
    v.add_argument("--samples", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def _render(out: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"status": out.status, **out.data}, sort_keys=True, indent=2) + "\n"
    if fmt == "tsv":
        if out.tsv is not None:
            return out.tsv
        rows = "".join(f"{k}\t{v}\n" for k, v in sorted(out.data.items()))
        return f"key\tvalue\nstatus\t{out.status}\n" + rows
    return out.text + "\n"


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = a.format or ("tsv" if a.command == "table" else "text")
    try:
        out = a.func(a)
    except _Usage as exc:
        print(f"realcycles {a.command}: error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except RealCyclesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _render(out, fmt)
    if a.out:
        Path(a.out).write_text(text)
    else:
        sys.stdout.write(text)
    return out.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
