#!/usr/bin/env python3
"""Derive the DTLZ7 front constants hard-coded in core/src/problems.cpp.

At g = 0 (which in DTLZ7 means 1 + g = 2) the last objective is
f_m = 2m - sum_i phi(f_i) with phi(t) = t (1 + sin(3 pi t)), so a point is
Pareto optimal iff every t_i is a "record" of phi on [0, 1]: no smaller t has
phi at least as large. The record set is [0, t1] U [t2, t_star].

Usage: python3 tools/derive_dtlz7_constants.py [--check]
"""

import argparse
import math
import sys

import mpmath as mp

mp.mp.dps = 40


def phi(t):
    return t * (1 + mp.sin(3 * mp.pi * t))


def dphi(t):
    return 1 + mp.sin(3 * mp.pi * t) + 3 * mp.pi * t * mp.cos(3 * mp.pi * t)


def bisect(fn, lo, hi, iters=200):
    flo = fn(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = fn(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def derive():
    t1 = bisect(dphi, mp.mpf("0.2"), mp.mpf("0.3"))[0]
    # upper bracket so that phi(t2) >= phi(t1) after rounding
    t2 = bisect(lambda t: phi(t) - phi(t1), mp.mpf("0.6"), mp.mpf("0.65"))[1]
    t_star = bisect(dphi, mp.mpf("0.8"), mp.mpf("0.9"))[0]
    return {"t1": t1, "t2": t2, "t_star": t_star, "phi_star": phi(t_star)}


def dense_check(c, samples=2_000_001):
    # brute force record scan on a grid, as a sanity check on the brackets
    best = -1.0
    records = []
    for k in range(samples):
        t = k / (samples - 1)
        v = t * (1 + math.sin(3 * math.pi * t))
        if v > best:
            best = v
            records.append(t)
    gaps = [(a, b) for a, b in zip(records, records[1:]) if b - a > 1e-3]
    assert len(gaps) == 1, gaps
    lo, hi = gaps[0]
    assert abs(lo - float(c["t1"])) < 1e-5, (lo, c["t1"])
    assert abs(hi - float(c["t2"])) < 1e-5, (hi, c["t2"])
    assert abs(records[-1] - float(c["t_star"])) < 1e-5


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="also run a dense grid scan")
    args = ap.parse_args()
    c = derive()
    for k, v in c.items():
        print(f"{k} = {mp.nstr(v, 17)}")
    for m in range(2, 11):
        ideal_last = 2 * m - (m - 1) * c["phi_star"]
        print(f"m={m}: ideal f_m = {mp.nstr(ideal_last, 17)}, nadir = ({mp.nstr(c['t_star'], 17)} x {m - 1}, {2 * m})")
    if args.check:
        dense_check(c)
        print("dense check ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
