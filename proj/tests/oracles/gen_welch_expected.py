#!/usr/bin/env python3
"""Generate frozen reference triples for the Welch t-test and the
Student-t two-sided p-value.

All arithmetic runs in mpmath at 50 decimal digits:

    t  = (m1 - m2) / sqrt(s1^2/n1 + s2^2/n2)
    df = (s1^2/n1 + s2^2/n2)^2 /
         [ (s1^2/n1)^2/(n1-1) + (s2^2/n2)^2/(n2-1) ]
    p  = I_x(df/2, 1/2)  with  x = df/(df + t^2)   (two-sided)

Outputs tests/data/welch_reference.json (20 sample pairs with t/df/p)
and tests/data/student_t_reference.json (20 (t, df) -> p pairs).
"""

import json
import os
import random

import mpmath as mp

mp.mp.dps = 50

SEED = 424242
DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")


def sample_stats(xs):
    n = len(xs)
    m = mp.fsum(xs) / n
    v = mp.fsum((x - m) ** 2 for x in xs) / (n - 1)
    return n, m, v


def welch(xs, ys):
    n1, m1, v1 = sample_stats([mp.mpf(x) for x in xs])
    n2, m2, v2 = sample_stats([mp.mpf(y) for y in ys])
    se2 = v1 / n1 + v2 / n2
    t = (m1 - m2) / mp.sqrt(se2)
    df = se2 ** 2 / ((v1 / n1) ** 2 / (n1 - 1) + (v2 / n2) ** 2 / (n2 - 1))
    p = two_sided_p(t, df)
    return t, df, p


def two_sided_p(t, df):
    if t == 0:
        return mp.mpf(1)
    x = df / (df + t * t)
    return mp.betainc(df / 2, mp.mpf(1) / 2, 0, x, regularized=True)


def main():
    rng = random.Random(SEED)
    pairs = []
    for _ in range(20):
        n1 = rng.randint(2, 30)
        n2 = rng.randint(2, 30)
        shift = rng.uniform(-3.0, 3.0)
        scale1 = rng.uniform(0.2, 8.0)
        scale2 = rng.uniform(0.2, 8.0)
        xs = [round(rng.gauss(0.0, scale1), 4) for _ in range(n1)]
        ys = [round(rng.gauss(shift, scale2), 4) for _ in range(n2)]
        t, df, p = welch(xs, ys)
        pairs.append({
            "sample1": xs,
            "sample2": ys,
            "t": float(t),
            "df": float(df),
            "p_two_sided": float(p),
        })
    with open(os.path.join(DATA_DIR, "welch_reference.json"), "w") as f:
        json.dump({"seed": SEED, "cases": pairs}, f, indent=1)

    tdf = []
    dfs = [1, 2, 3, 4, 5, 7, 10, 15, 24, 30, 50, 80, 120, 200, 500,
           2.5, 6.7, 13.37, 99.9, 1.2]
    for i, df in enumerate(dfs):
        t = round(rng.uniform(-8.0, 8.0), 4)
        tdf.append({
            "t": t,
            "df": df,
            "p_two_sided": float(two_sided_p(mp.mpf(t), mp.mpf(df))),
        })
    with open(os.path.join(DATA_DIR, "student_t_reference.json"), "w") as f:
        json.dump({"seed": SEED, "cases": tdf}, f, indent=1)

    print(f"wrote {len(pairs)} welch cases, {len(tdf)} student-t cases")


if __name__ == "__main__":
    main()
