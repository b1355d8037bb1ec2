"""Ratio of N_C(m, n) to the main term (log 2)/(4 pi sqrt n) e^{pi sqrt(n/3)}.

Prints one CSV row per (family, m, n) and a verdict per (family, m).

    python scripts/ratio_scan.py --top 4000 --ms 0 1 2
"""
import argparse
import sys
import time
from dataclasses import dataclass, field

from sptcrank.asymptotics import default_grid, ratio_scan
from sptcrank.crank_table import crank_table


@dataclass
class Config:
    top: int = 4000
    start: int = 500
    ms: list = field(default_factory=lambda: [0, 1, 2])
    families: tuple = ("C1", "C5")


def run(cfg: Config) -> bool:
    grid = default_grid(cfg.top, cfg.start)
    ok = True
    print("family,m,n,ratio,pair_averaged_ratio")
    for fam in cfg.families:
        t0 = time.perf_counter()
        table = crank_table(fam, cfg.top + 1, max(cfg.ms))
        print(f"# {fam} table to n={cfg.top + 1} in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
        for m in cfg.ms:
            rep = ratio_scan(fam, m, grid, table)
            for n, r, s in zip(rep.grid, rep.ratio, rep.smoothed):
                print(f"{fam},{m},{n},{r:.6f},{s:.6f}")
            print(f"# {fam} m={m}: {rep.verdict}", file=sys.stderr)
            ok &= rep.verdict == "converging"
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--top", type=int, default=4000)
    ap.add_argument("--start", type=int, default=500)
    ap.add_argument("--ms", type=int, nargs="+", default=[0, 1, 2])
    args = ap.parse_args()
    ok = run(Config(args.top, args.start, args.ms))
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
