#!/usr/bin/env python3
"""Obtain a table of nontrivial zeta-zero ordinates in the plain text format
read by the library (one ascending decimal ordinate per line, '#' comments).

Two modes:

  generate  compute the first N ordinates locally with mpmath (no network),
            cross-checked against the smooth zero-counting formula
  fetch     download from the LMFDB API and reformat (needs network)

The library itself never fetches anything; this script exists so published
tables can be reproduced or refreshed.
"""

import argparse
import sys


def smooth_zero_count(t):
    # Riemann-von Mangoldt main term: N(T) ~ (T/2pi) log(T/2pie) + 7/8
    import math
    return t / (2 * math.pi) * math.log(t / (2 * math.pi * math.e)) + 7.0 / 8.0


def _worker(args):
    n, dps = args
    import mpmath
    mpmath.mp.dps = dps
    return n, mpmath.zetazero(n).imag


def generate(count, out_path, dps, jobs):
    import multiprocessing as mp

    with mp.Pool(jobs) as pool:
        results = [None] * count
        done = 0
        for n, gamma in pool.imap_unordered(_worker, ((i + 1, dps) for i in range(count)), chunksize=16):
            results[n - 1] = gamma
            done += 1
            if done % 500 == 0:
                print(f"  {done}/{count} ordinates", file=sys.stderr)

    # Consistency audit: ascending, and index agrees with the smooth count.
    prev = 0.0
    for i, g in enumerate(results):
        g = float(g)
        if g <= prev:
            raise RuntimeError(f"ordinate {i + 1} not ascending: {g} after {prev}")
        drift = abs((i + 1) - smooth_zero_count(g))
        if drift > 3.0:
            raise RuntimeError(f"ordinate {i + 1} = {g} drifts {drift:.2f} from the counting formula")
        prev = g

    with open(out_path, "w") as f:
        f.write(f"# first {count} nontrivial zeta zero ordinates (positive imaginary parts)\n")
        f.write(f"# generated by fetch_zeros.py via mpmath at {dps} significant digits\n")
        for g in results:
            f.write(mpformat(g) + "\n")
    print(f"wrote {count} ordinates to {out_path}", file=sys.stderr)


def mpformat(g):
    s = f"{float(g):.12f}"
    return s


def fetch(count, out_path):
    import json
    import urllib.request

    url = f"https://api.lmfdb.org/riemann-zeta-zeros/?_format=json&_limit={count}"
    with urllib.request.urlopen(url) as r:
        data = json.loads(r.read())
    zeros = sorted(float(rec["zero"]) for rec in data["data"])
    if len(zeros) < count:
        raise RuntimeError(f"API returned {len(zeros)} zeros, wanted {count}")
    with open(out_path, "w") as f:
        f.write(f"# first {count} nontrivial zeta zero ordinates, via LMFDB\n")
        for g in zeros[:count]:
            f.write(f"{g:.12f}\n")
    print(f"wrote {count} ordinates to {out_path}", file=sys.stderr)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("mode", choices=["generate", "fetch"])
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--out", default="data/zeros_10k.txt")
    ap.add_argument("--dps", type=int, default=17, help="working precision for generate mode")
    ap.add_argument("--jobs", type=int, default=0, help="worker processes (0 = all cores)")
    args = ap.parse_args()

    if args.mode == "generate":
        import multiprocessing
        jobs = args.jobs or multiprocessing.cpu_count()
        generate(args.count, args.out, args.dps, jobs)
    else:
        fetch(args.count, args.out)


if __name__ == "__main__":
    main()
