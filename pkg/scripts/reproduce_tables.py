"""Print the Heart attack results: method RMSE table, SI row, per-variable RMSE, GOF.

    python3 scripts/reproduce_tables.py [--restarts 20] [--seed 42]
"""
import argparse

import numpy as np

from corrapprox import (
    heart,
    pca_adjusted_fit,
    pca_fit,
    rmse_offdiag,
    rmse_per_variable,
    rmse_with_diag,
    wals_adjusted_fit,
    wals_fit,
)
from corrapprox.compare import DEFAULT_METHODS, MethodSpec, run_compare
from corrapprox.metrics import eigenvalue_shares, gof_corr_squared_eigs, gof_data_eigs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    R = heart()
    print("RMSE by method (rank 2)")
    specs = [MethodSpec(m, 2, args.restarts, args.seed) for m in DEFAULT_METHODS + ("pca-adj",)]
    print(run_compare(R, specs).format())

    fits = {
        "pca": (pca_fit(R, 2), True),
        "pca-adj": (pca_adjusted_fit(R, 2), True),
        "wals": (wals_fit(R, 2), False),
        "wals-adj": (wals_adjusted_fit(R, 2), False),
    }
    si = R.index("SI")
    print("\nFitted correlations of SI")
    print(f"{'':<8}" + "".join(f"{m:>10}" for m in fits))
    for j, lab in enumerate(R.labels):
        print(f"{lab:<8}" + "".join(f"{f.fitted[si, j]:>10.3f}" for f, _ in fits.values()))
    print(f"{'RMSE':<8}" + "".join(f"{rmse_per_variable(R, f.fitted, d)[si]:>10.3f}" for f, d in fits.values()))

    print("\nPer-variable RMSE (diagonal included for the pca columns)")
    print(f"{'':<8}" + "".join(f"{m:>10}" for m in fits))
    per = {m: rmse_per_variable(R, f.fitted, d) for m, (f, d) in fits.items()}
    for j, lab in enumerate(R.labels):
        print(f"{lab:<8}" + "".join(f"{per[m][j]:>10.4f}" for m in fits))
    alls = [rmse_with_diag(R, f.fitted) if d else rmse_offdiag(R, f.fitted) for f, d in fits.values()]
    print(f"{'All':<8}" + "".join(f"{v:>10.4f}" for v in alls))

    data, corr = eigenvalue_shares(R, 2)
    print("\nGoodness of fit (rank 2)")
    print(f"data matrix        {data[0]:.3f} + {data[1]:.3f} = {gof_data_eigs(R, 2):.3f}")
    print(f"correlation matrix {corr[0]:.3f} + {corr[1]:.3f} = {gof_corr_squared_eigs(R, 2):.3f}")
    print(f"chi-square(2) 0.95 scaling factor {1 / np.sqrt(-2 * np.log(0.05)):.4f}")


if __name__ == "__main__":
    main()
