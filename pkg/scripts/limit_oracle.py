"""High-N run of the ultraspherical -> Bessel limit.

Prints the gap at each N together with N * gap.  The N = 200 tolerances in
rootpoly.verify.LIMIT_TOLERANCES were fixed from this table.
"""
import argparse
import json
from dataclasses import asdict, dataclass, field

from rootpoly.onevar import limit_ultra_to_bessel


@dataclass
class OracleConfig:
    ks: list = field(default_factory=lambda: [0, 1, 2])
    Ns: list = field(default_factory=lambda: [200, 400, 800, 2000, 5000, 20000])
    lam: float = 1.0
    x: float = 1.0


def run(cfg: OracleConfig) -> list[dict]:
    rows = []
    for k in cfg.ks:
        for N in cfg.Ns:
            r = limit_ultra_to_bessel(k, cfg.lam, cfg.x, N)
            rows.append({"k": k, "N": N, "gap": f"{r.gap:.6e}", "N_gap": f"{N * r.gap:.6f}"})
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    cfg = OracleConfig()
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1))
        return
    print(f"{'k':>2} {'N':>6} {'gap':>13} {'N*gap':>10}")
    for r in rows:
        print(f"{r['k']:>2} {r['N']:>6} {r['gap']:>13} {r['N_gap']:>10}")


if __name__ == "__main__":
    main()
