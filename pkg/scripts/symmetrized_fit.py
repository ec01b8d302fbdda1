"""Measure the symmetrized Heckman eigenvalues against the L eigenvalue.

For each dominant lam the j = 2 operator acts on P_lam by a scalar s(lam).  The
script solves s = a * E(lam) + b from two weights, checks every other weight
against the fit, and prints the j = 3 eigenvalues next to them.
"""
import argparse
from dataclasses import dataclass

from rootpoly.dunklops import coweight_basis, symmetrized_power_apply
from rootpoly.orthopoly import ortho_poly
from rootpoly.rootdata import MultiplicityFn, build_root_system, dominant_weights, eigenvalue


@dataclass
class FitConfig:
    type: str = "C2"
    k: tuple = (1, 1)
    max_height: int = 4
    coweight: int = 0


def measure(cfg: FitConfig):
    rs = build_root_system(cfg.type)
    k = MultiplicityFn.coerce(rs, cfg.k)
    xi = coweight_basis(rs)[cfg.coweight]
    out = []
    for lam in dominant_weights(rs, cfg.max_height):
        p = ortho_poly(rs, lam, k).as_laurent()
        s = {}
        for j in (2, 3):
            img = symmetrized_power_apply(rs, xi, j, k, p)
            c = img.coeff(lam)
            if img != p.scale(c):
                raise SystemExit(f"P_{lam} is not an eigenfunction for j={j}")
            s[j] = c
        out.append((lam, eigenvalue(rs, lam, k), s[2], s[3]))
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", default=FitConfig.type)
    p.add_argument("--k", default="1,1")
    p.add_argument("--max-height", type=int, default=FitConfig.max_height)
    args = p.parse_args()
    cfg = FitConfig(args.type, tuple(int(x) for x in args.k.split(",")), args.max_height)
    pts = measure(cfg)
    (_, e0, s0, _), (_, e1, s1, _) = pts[0], next(t for t in pts if t[1] != pts[0][1])
    a = (s1 - s0) / (e1 - e0)
    b = s0 - a * e0
    print(f"{cfg.type} k={cfg.k}: s2 = ({a}) * E + ({b})")
    for lam, e, s2, s3 in pts:
        flag = "" if s2 == a * e + b else "  <-- off the fit"
        print(f"  lam={lam}  E={e}  s2={s2}  s3={s3}{flag}")


if __name__ == "__main__":
    main()
