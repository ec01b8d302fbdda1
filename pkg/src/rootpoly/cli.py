"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 internal consistency failure (division
remainder, singular Gram system, failed verification).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .dunklops import (
    CHEREDNIK,
    HECKMAN,
    L_OPERATOR,
    RATIONAL_DUNKL,
    AmbientPoly,
    OperatorSpec,
    commutator_report,
    coweight_basis,
)
from .exactnum import ExactArithmeticError, coeff_to_json
from .laurent import DivisionError, LaurentPoly, latex, latex_coeff, orbit_sum
from .onevar import (
    EigenMismatchError,
    ProportionalityError,
    bessel_eval,
    gegenbauer_float,
    limit_q_to_1,
    limit_ultra_to_bessel,
    qdiff_check,
)
from .orthopoly import (
    JACOBI,
    MACDONALD,
    SingularGramError,
    full_orthogonality_report,
    norm_table,
    ortho_basis,
    ortho_poly,
)
from .rootdata import (
    MultiplicityFn,
    RootSystemError,
    build_root_system,
    eigenvalue,
    is_dominant,
    weight_height,
)
from . import verify as verify_mod

DEFAULT_CAPS = {"max_height": 12, "degree": 8, "box": 4}
CAP_ENV = "ROOTPOLY_CAP_OVERRIDE"


class UsageError(Exception):
    pass


class ConsistencyError(Exception):
    pass


def fmt_float(x: float) -> str:
    return f"{x:.17g}"


def parse_config(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value.strip("\"'")
    return out


def caps() -> dict:
    c = dict(DEFAULT_CAPS)
    raw = os.environ.get(CAP_ENV)
    if raw:
        try:
            bump = int(raw)
        except ValueError:
            raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}")
        c = {key: max(v, bump) for key, v in c.items()}
    return c


def _int_list(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in s.replace(" ", "").strip("[]()").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}")


def _frac_list(s: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in s.replace(" ", "").strip("[]()").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated rationals, got {s!r}")


def _setting(args, name, config, default=None, conv=str):
    v = getattr(args, name, None)
    if v is None and name in config:
        v = conv(config[name])
    return default if v is None else v


def _capped(args, name, config, default):
    v = _setting(args, name, config, default, int)
    cap = caps()[name]
    if not 0 <= v <= cap:
        raise UsageError(f"--{name.replace('_', '-')} must be in [0, {cap}], got {v}")
    return v


def _root_system(args, config):
    label = _setting(args, "type", config)
    if not label:
        raise UsageError("--type is required")
    return build_root_system(label)


def _k(args, config, rs):
    raw = _setting(args, "k", config)
    if raw is None:
        raise UsageError("--k is required")
    return MultiplicityFn.coerce(rs, _int_list(raw))


def _lam(args, config, rs):
    raw = _setting(args, "lam", config)
    if raw is None:
        raise UsageError("--lambda is required")
    lam = _int_list(raw)
    if len(lam) != rs.rank:
        raise UsageError(f"lambda needs {rs.rank} coordinates for {rs.name}")
    if not is_dominant(lam):
        raise UsageError(f"lambda {list(lam)} is not dominant")
    if weight_height(lam) > caps()["max_height"]:
        raise UsageError(f"lambda height exceeds cap {caps()['max_height']}")
    return lam


def _format(args, config):
    return _setting(args, "format", config, "json")


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------- commands


def cmd_rootinfo(args, config):
    rs = _root_system(args, config)
    data = rs.to_json()
    if _format(args, config) == "csv":
        return _dump_csv(["root", "weight", "length2", "class"],
                         [[" ".join(map(str, r["root"])), " ".join(map(str, r["weight"])),
                           r["length2"], r["class"]] for r in data["positive_roots"]])
    return _dump_json(data)


def cmd_msym(args, config):
    rs = _root_system(args, config)
    m = orbit_sum(rs, _lam(args, config, rs))
    fmt = _format(args, config)
    if fmt == "latex":
        return latex(m)
    if fmt == "csv":
        return _dump_csv(["exp", "coeff"], [[" ".join(map(str, w)), str(c)] for w, c in m.items()])
    return _dump_json(m.to_json())


def _poly_payload(rs, lam, k, family):
    p = ortho_poly(rs, lam, k, family)
    basis = ortho_basis(rs, p.k, family)
    norm = basis.inner(p, p)
    if family == JACOBI:
        e = coeff_to_json(eigenvalue(rs, lam, p.k))
    elif rs.name == "A1":
        e = coeff_to_json(qdiff_check(p))
    else:
        e = None
    return p, {"lambda": list(lam),
               "coeffs": [{"mu": list(mu), "c": coeff_to_json(c)}
                          for mu, c in sorted(p.coeffs.items()) if c],
               "norm": coeff_to_json(norm), "eigenvalue": e}


def _poly_cmd(args, config, family):
    rs = _root_system(args, config)
    k = _k(args, config, rs)
    lam = _lam(args, config, rs)
    p, payload = _poly_payload(rs, lam, k, family)
    fmt = _format(args, config)
    if fmt == "latex":
        rows = [f"({','.join(map(str, mu))}) & {latex_coeff(c)} \\\\"
                for mu, c in sorted(p.coeffs.items()) if c]
        return "\n".join(["\\begin{tabular}{ll}", "$\\mu$ & $c_{\\lambda\\mu}$ \\\\ \\hline",
                          *rows, "\\end{tabular}"])
    if fmt == "csv":
        return _dump_csv(["mu", "c"], [[" ".join(map(str, c["mu"])), json.dumps(c["c"])
                                        if isinstance(c["c"], dict) else c["c"]]
                                       for c in payload["coeffs"]])
    return _dump_json(payload)


def cmd_jacobi(args, config):
    return _poly_cmd(args, config, JACOBI)


def cmd_macdonald(args, config):
    return _poly_cmd(args, config, MACDONALD)


def cmd_gram(args, config):
    rs = _root_system(args, config)
    k = _k(args, config, rs)
    family = _setting(args, "family", config, JACOBI)
    h = _capped(args, "max_height", config, 4)
    rep = full_orthogonality_report(rs, k, family, max_height=h)
    if _format(args, config) == "csv":
        rows = [[" ".join(map(str, a)), " ".join(map(str, b)), json.dumps(coeff_to_json(v))
                 if family == MACDONALD else coeff_to_json(v)] for (a, b), v in rep.table.items()]
        out = _dump_csv(["lambda", "mu", "value"], rows)
    else:
        out = _dump_json(rep.to_json())
    if not rep.ok:
        raise ConsistencyError(out + "\nnonzero off-diagonal Gram entries")
    return out


def cmd_norm(args, config):
    rs = _root_system(args, config)
    k = _k(args, config, rs)
    family = _setting(args, "family", config, JACOBI)
    h = _capped(args, "max_height", config, 4)
    t = norm_table(rs, k, h, family)
    fmt = _format(args, config)
    if fmt == "csv":
        return _dump_csv(["lambda", "norm", "ratio", "ct"],
                         [[" ".join(map(str, r["lambda"])), str(r["norm"]), str(r["ratio"]),
                           str(t["ct"])] for r in t["rows"]])
    if fmt == "latex":
        rows = [f"({','.join(map(str, r['lambda']))}) & {latex_coeff(r['norm'])} & "
                f"{latex_coeff(r['ratio'])} \\\\" for r in t["rows"]]
        return "\n".join(["\\begin{tabular}{lll}",
                          f"\\multicolumn{{3}}{{l}}{{CT $= {latex_coeff(t['ct'])}$}} \\\\",
                          "$\\lambda$ & norm & ratio \\\\ \\hline", *rows, "\\end{tabular}"])
    return _dump_json({"type": t["type"], "k": list(t["k"]), "family": family,
                       "ct": coeff_to_json(t["ct"]),
                       "rows": [{"lambda": list(r["lambda"]), "norm": coeff_to_json(r["norm"]),
                                 "ratio": coeff_to_json(r["ratio"])} for r in t["rows"]]})


def _read_poly_json(raw: str):
    if raw.startswith("@"):
        with open(raw[1:], encoding="utf-8") as fh:
            raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--poly is not valid JSON: {exc}")


def cmd_dunkl(args, config):
    rs = _root_system(args, config)
    k = _k(args, config, rs)
    if args.poly is None:
        raise UsageError("--poly is required")
    data = _read_poly_json(args.poly)
    try:
        f = (AmbientPoly if args.op == RATIONAL_DUNKL else LaurentPoly).from_json(rs, data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad polynomial: {exc}")
    xi = None
    if args.op != L_OPERATOR:
        if args.xi is None:
            raise UsageError(f"--xi is required for {args.op}")
        xi = _frac_list(args.xi)
        if len(xi) != rs.rank:
            raise UsageError(f"xi needs {rs.rank} coordinates")
    out = OperatorSpec(args.op, rs, k, xi)(f)
    if _format(args, config) == "latex" and isinstance(out, LaurentPoly):
        return latex(out)
    return _dump_json(out.to_json())


def _commutator_grid(box: int, degree: int):
    rows, ok = [], True
    for label in ("A2", "B2", "C2"):
        rs = build_root_system(label)
        a, b = coweight_basis(rs)
        for k in verify_mod.multiplicity_grid(rs):
            for kind, cap in ((RATIONAL_DUNKL, degree), (CHEREDNIK, box)):
                rep = commutator_report(OperatorSpec(kind, rs, k, a), OperatorSpec(kind, rs, k, b), cap)
                ok = ok and rep.vanishes
                rows.append(rep.to_json())
            if any(k):
                rep = commutator_report(OperatorSpec(HECKMAN, rs, k, a), OperatorSpec(HECKMAN, rs, k, b),
                                        box, stop_at_first=True)
                row = rep.to_json()
                # with one length class switched off the active roots are A1 x A1,
                # where the Heckman operators decouple and commute
                row["expected_nonzero"] = all(k)
                ok = ok and rep.vanishes != row["expected_nonzero"]
                rows.append(row)
    return rows, ok


def cmd_verify(args, config):
    fmt = _format(args, config)
    if args.target == "commutators":
        box = _capped(args, "box", config, 3)
        degree = _capped(args, "degree", config, 6)
        rows, ok = _commutator_grid(box, degree)
        if fmt == "csv":
            out = _dump_csv(["kind", "type", "k", "checked", "vanishes"],
                            [[r["kind"], r["type"], " ".join(map(str, r["k"])), r["checked"],
                              r["vanishes"]] for r in rows])
        else:
            out = _dump_json({"reports": rows, "ok": ok})
        if not ok:
            raise ConsistencyError(out + "\nunexpected commutator behaviour")
        return out
    if not args.all and args.criterion is None:
        raise UsageError("verify needs --all, --criterion N, or the 'commutators' target")
    checks = verify_mod.ALL_CHECKS
    if args.criterion is not None:
        if not 1 <= args.criterion <= len(checks):
            raise UsageError(f"--criterion must be in [1, {len(checks)}]")
        checks = [checks[args.criterion - 1]]
    results = []
    for check in checks:
        res = check()
        results.append(res)
        if fmt != "json":
            print(res.line(), flush=True)
    ok = all(r.passed for r in results)
    out = _dump_json({"results": [r.to_json() for r in results], "ok": ok}) if fmt == "json" \
        else f"{sum(r.passed for r in results)}/{len(results)} passed"
    if not ok:
        raise ConsistencyError(out)
    return out


def cmd_eval1d(args, config):
    k = int(_setting(args, "k", config, "0"))
    tol = float(_setting(args, "tol", config, "1e-15"))
    if args.x is None:
        raise UsageError("--x is required")
    x = args.x
    if args.function == "bessel":
        return _dump_json({"function": "bessel", "k": k, "x": fmt_float(x),
                           "value": fmt_float(bessel_eval(k, x, tol))})
    if args.function == "gegenbauer":
        if args.n is None:
            raise UsageError("--n is required for gegenbauer")
        return _dump_json({"function": "gegenbauer", "n": args.n, "k": k, "x": fmt_float(x),
                           "value": fmt_float(gegenbauer_float(args.n, k, x))})
    # E_k(x) = J_k(x) + i x/(2k+1) J_{k+1}(x)
    re = bessel_eval(k, x, tol)
    im = x / (2 * k + 1) * bessel_eval(k + 1, x, tol)
    return _dump_json({"function": "genexp", "k": k, "x": fmt_float(x),
                       "value": {"re": fmt_float(re), "im": fmt_float(im)}})


def cmd_limits(args, config):
    ks = _int_list(_setting(args, "k", config, "0,1,2"))
    N = int(_setting(args, "N", config, 200))
    lam = float(_setting(args, "lam", config, "1"))
    x = args.x if args.x is not None else 1.0
    nmax = _capped(args, "degree", config, 8)
    rows = [limit_ultra_to_bessel(k, lam, x, N) for k in ks]
    q_rows = [limit_q_to_1(n, k) for k in ks for n in range(nmax + 1)]
    if _format(args, config) == "csv":
        return _dump_csv(["k", "lambda", "x", "N", "lhs", "rhs", "gap"],
                         [[r.k, fmt_float(r.lam), fmt_float(r.x), r.N, fmt_float(r.lhs),
                           fmt_float(r.rhs), fmt_float(r.gap)] for r in rows])
    return _dump_json({
        "bessel": [{"k": r.k, "lambda": fmt_float(r.lam), "x": fmt_float(r.x), "N": r.N,
                    "lhs": fmt_float(r.lhs), "rhs": fmt_float(r.rhs), "gap": fmt_float(r.gap)}
                   for r in rows],
        "q_to_1": [{"n": r["n"], "k": r["k"], "equal": r["equal"],
                    "coeffs": [{"mu": list(mu), "c": str(c)} for mu, c in sorted(r["limit"].items()) if c]}
                   for r in q_rows],
    })


COMMANDS = {
    "rootinfo": cmd_rootinfo, "msym": cmd_msym, "jacobi": cmd_jacobi, "macdonald": cmd_macdonald,
    "gram": cmd_gram, "norm": cmd_norm, "dunkl": cmd_dunkl, "verify": cmd_verify,
    "eval1d": cmd_eval1d, "limits": cmd_limits,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="root system, e.g. A2, C2")
    common.add_argument("--k", help="multiplicities, one per root-length class (long first)")
    common.add_argument("--lambda", dest="lam", help="dominant weight in fundamental coordinates")
    common.add_argument("--format", choices=["json", "latex", "csv"])
    common.add_argument("--config", help="key = value file; flags take precedence")
    common.add_argument("--max-height", dest="max_height", type=int)
    common.add_argument("--degree", type=int)
    common.add_argument("--box", type=int)
    common.add_argument("--family", choices=[JACOBI, MACDONALD])

    p = _Parser(prog="rootpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("rootinfo", "msym", "jacobi", "macdonald", "gram", "norm"):
        sub.add_parser(name, parents=[common])
    d = sub.add_parser("dunkl", parents=[common])
    d.add_argument("--op", required=True, choices=[RATIONAL_DUNKL, HECKMAN, CHEREDNIK, L_OPERATOR])
    d.add_argument("--xi", help="direction in fundamental coordinates")
    d.add_argument("--poly", help="polynomial JSON, or @file")
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("target", nargs="?", choices=["commutators"])
    v.add_argument("--all", action="store_true")
    v.add_argument("--criterion", type=int)
    e = sub.add_parser("eval1d", parents=[common])
    e.add_argument("--function", required=True, choices=["bessel", "genexp", "gegenbauer"])
    e.add_argument("--x", type=float)
    e.add_argument("--n", type=int)
    e.add_argument("--tol", type=float)
    lim = sub.add_parser("limits", parents=[common])
    lim.add_argument("--N", type=int)
    lim.add_argument("--x", type=float)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        config = parse_config(args.config) if args.config else {}
        out = COMMANDS[args.command](args, config)
    except (UsageError, RootSystemError, OSError) as exc:
        print(f"rootpoly: error: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"rootpoly: error: {exc}", file=stderr)
        return 2
    except ConsistencyError as exc:
        print(str(exc), file=stdout)
        return 3
    except (DivisionError, SingularGramError, EigenMismatchError, ProportionalityError,
            ExactArithmeticError) as exc:
        print(f"rootpoly: internal consistency failure: {type(exc).__name__}: {exc}", file=stderr)
        return 3
    print(out, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
