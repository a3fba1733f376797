"""Run every randomized suite over a range of seeds and print a TSV summary."""

import argparse
import time

from realcycles.verify import RANDOMIZED, run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--samples", type=int, default=None)
    args = ap.parse_args()
    print("suite\tseed\tstatus\tchecks\tfailures\tseconds")
    for name in sorted(RANDOMIZED):
        for seed in range(args.seeds):
            t0 = time.perf_counter()
            rep = run_suite(name, args.samples, seed)
            dt = time.perf_counter() - t0
            print(f"{name}\t{seed}\t{rep.status}\t{len(rep.items)}\t{len(rep.failures())}\t{dt:.2f}")


if __name__ == "__main__":
    main()
