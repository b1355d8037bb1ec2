"""Wright's integral P_s(u) on the segment 1 - iM .. 1 + iM against I-Bessel values.

    python scripts/wright_bessel.py --us 5 10 15 20
"""
import argparse
import math
from dataclasses import dataclass, field

from sptcrank.asymptotics import bessel_I, wright_P


@dataclass
class Config:
    us: list = field(default_factory=lambda: [5.0, 10.0, 15.0, 20.0])
    ss: tuple = (-0.5, 0.5)
    M: float = 1.0
    steps: int = 4000


def run(cfg: Config) -> None:
    print("s,u,bessel_order,P_real,I,scaled_gap,step_doubling_rel")
    for s in cfg.ss:
        for order in sorted({-s - 1, -1.5}):
            for u in cfg.us:
                p = wright_P(s, u, cfg.M, cfg.steps)
                p2 = wright_P(s, u, cfg.M, 2 * cfg.steps)
                b = bessel_I(order, 2 * u)
                gap = abs(p - b) * math.exp(-2 * u)
                print(f"{s},{u},{order},{p.real:.6e},{b:.6e},{gap:.3e},{abs(p - p2) / abs(p2):.1e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--us", type=float, nargs="+", default=[5.0, 10.0, 15.0, 20.0])
    ap.add_argument("--M", type=float, default=1.0)
    ap.add_argument("--steps", type=int, default=4000)
    args = ap.parse_args()
    run(Config(args.us, M=args.M, steps=args.steps))


if __name__ == "__main__":
    main()
