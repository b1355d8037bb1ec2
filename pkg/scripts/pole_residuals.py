"""Residuals of h_{A,B} against its poles at q = 1 and q = -1, and the away band.

    python scripts/pole_residuals.py --kmin 4 --kmax 10
"""
import argparse
from dataclasses import dataclass

from sptcrank.analytic import (
    HParams,
    away_band,
    check_away,
    check_pole_minus_one,
    check_pole_one,
)


@dataclass
class Config:
    kmin: int = 4
    kmax: int = 10
    params: tuple = ((0.5, 1.5), (1.5, 0.5))
    band_points: int = 32

    @property
    def ys(self) -> list:
        return [2.0**-k for k in range(self.kmin, self.kmax + 1)]


def run(cfg: Config) -> None:
    print("A,B,pole,y,residual,main_term,residual_times_y")
    for A, B in cfg.params:
        p = HParams(A, B)
        for check, label in ((check_pole_one, "+1"), (check_pole_minus_one, "-1")):
            t = check(p, cfg.ys)
            for r in t.rows():
                print(f"{A},{B},{label},{r['y']:.6g},{r['residual']:.6f},{r['main_term']:.3f},"
                      f"{r['residual_times_y']:.3e}")
            print(f"# ({A},{B}) pole {label}: {t.verdict}, max residual {max(t.residuals):.3f}")
    print("A,B,y,max_h_times_y^1.5,argmax_x")
    for A, B in cfg.params:
        p = HParams(A, B)
        for y in cfg.ys:
            r = check_away(p, y, away_band(y, cfg.band_points))
            print(f"{A},{B},{y:.6g},{r.max_scaled:.5f},{r.argmax_x:.4f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmin", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=10)
    ap.add_argument("--points", type=int, default=32)
    args = ap.parse_args()
    run(Config(args.kmin, args.kmax, band_points=args.points))


if __name__ == "__main__":
    main()
