#!/usr/bin/env python3
"""Sweep the UV cutoff and print the four decoherence variants side by side.

Reproduces the basic picture: the sub-leading and hard sectors grow like
(Omega tau)^2 but nearly cancel, leaving a dressed value that creeps up
logarithmically.
"""

import argparse

import numpy as np

from softdeco import CutoffSet, InterferometerGeometry, closed_forms, decoherence_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--l", type=float, default=1.0)
    ap.add_argument("--tau", type=float, default=100.0)
    ap.add_argument("--lambda-ir", type=float, default=1e-6)
    ap.add_argument("--uv-min", type=float, default=0.1)
    ap.add_argument("--uv-max", type=float, default=100.0)
    ap.add_argument("--points", type=int, default=13)
    args = ap.parse_args()

    g = InterferometerGeometry(args.l, args.tau)
    print(f"# square interferometer  l={g.l}  tau={g.tau}  v={g.v:.4g}")
    print("# omega_uv      full          dressed       sub           hard          closed_dressed")
    for uv in np.geomspace(args.uv_min, args.uv_max, args.points):
        cut = CutoffSet(omega_uv=float(uv), lambda_ir=args.lambda_ir)
        rep = decoherence_report(g, cut)
        print(
            f"{uv:12.5e} {rep.gamma_full:13.5e} {rep.gamma_dressed:13.5e} "
            f"{rep.gamma_sub:13.5e} {rep.gamma_hard:13.5e} {rep.closed.dressed:13.5e}"
        )


if __name__ == "__main__":
    main()
