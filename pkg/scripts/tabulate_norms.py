"""Exact CT(delta_k) and norm-ratio tables for A1, A2, B2, C2 written as CSV."""
import argparse
import csv
import itertools
import sys
from dataclasses import dataclass, field

from rootpoly.exactnum import coeff_to_json
from rootpoly.orthopoly import JACOBI, MACDONALD, norm_table
from rootpoly.rootdata import build_root_system


@dataclass
class TableConfig:
    types: list = field(default_factory=lambda: ["A1", "A2", "B2", "C2"])
    k_values: tuple = (0, 1, 2)
    max_height: int = 4
    family: str = JACOBI


def rows(cfg: TableConfig):
    for label in cfg.types:
        rs = build_root_system(label)
        for k in itertools.product(cfg.k_values, repeat=rs.n_classes):
            t = norm_table(rs, k, cfg.max_height, cfg.family)
            for r in t["rows"]:
                yield [label, " ".join(map(str, k)), " ".join(map(str, r["lambda"])),
                       coeff_to_json(t["ct"]), coeff_to_json(r["norm"]), coeff_to_json(r["ratio"])]


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-height", type=int, default=TableConfig.max_height)
    p.add_argument("--family", choices=[JACOBI, MACDONALD], default=JACOBI)
    p.add_argument("--types", nargs="+")
    args = p.parse_args()
    cfg = TableConfig(max_height=args.max_height, family=args.family)
    if args.types:
        cfg.types = args.types
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["type", "k", "lambda", "ct", "norm", "ratio"])
    w.writerows(rows(cfg))


if __name__ == "__main__":
    main()
