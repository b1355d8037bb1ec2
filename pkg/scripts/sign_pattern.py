"""Empirical onset n0 of the alternating sign of N_C(m, n) - N_C(m+1, n).

Also prints the averaged ratio of |N(m,n) - N(m+1,n)| to the secondary
term e^{pi sqrt(n/3)} / (8 sqrt 3 n) at a few n.

    python scripts/sign_pattern.py --N 2000 --mmax 4
"""
import argparse
from dataclasses import dataclass

from sptcrank.asymptotics import secondary_ratios, sign_scan


@dataclass
class Config:
    N: int = 2000
    mmax: int = 4
    check_at: tuple = (250, 500, 1000, 1999)


def run(cfg: Config) -> None:
    print("family,m,n0,holds," + ",".join(f"secondary@{n}" for n in cfg.check_at))
    for fam in ("C1", "C5"):
        for m in range(cfg.mmax + 1):
            s = sign_scan(fam, m, cfg.N)
            sec = secondary_ratios(fam, m, cfg.check_at, cfg.N)
            print(f"{fam},{m},{s.n0},{s.holds}," + ",".join(f"{x:.4f}" for x in sec))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=2000)
    ap.add_argument("--mmax", type=int, default=4)
    args = ap.parse_args()
    check_at = tuple(n for n in Config.check_at if n < args.N)
    run(Config(args.N, args.mmax, check_at))


if __name__ == "__main__":
    main()
