"""Dump the bigraded I^j tables and Chow-Witt groups of RP^0 .. RP^N."""

import argparse
import json
from pathlib import Path

from realcycles.cellular import builtin, chow_witt_table, derive_I_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=5)
    ap.add_argument("--out", type=Path, default=Path("results/tables"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(args.max_dim + 1):
        X = builtin(f"RP{n}")
        T = derive_I_table(X)
        (args.out / f"RP{n}.tsv").write_text(T.to_tsv())
        cw = {L: [str(e.group) for e in chow_witt_table(X, L)] for L in ("Z", "ZL")}
        (args.out / f"RP{n}_chowwitt.json").write_text(json.dumps(cw, indent=2, sort_keys=True) + "\n")
        print(f"RP{n}: CW(Z) = {cw['Z']}, CW(ZL) = {cw['ZL']}")


if __name__ == "__main__":
    main()
