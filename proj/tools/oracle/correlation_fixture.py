#!/usr/bin/env python3
"""Hand-style Pearson computations for the correlation fixtures.

Uses exact rationals for the sums and 50-digit decimals for the square root,
so the frozen values do not depend on floating-point evaluation order.

    python3 tools/oracle/correlation_fixture.py tests/data
"""
import sys
from decimal import Decimal, getcontext
from fractions import Fraction
from pathlib import Path

getcontext().prec = 50


def pearson(xs, ys):
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    num = Decimal(sxy.numerator) / Decimal(sxy.denominator)
    den = (Decimal(sxx.numerator) / Decimal(sxx.denominator) * Decimal(syy.numerator) / Decimal(syy.denominator)).sqrt()
    return num / den


def main(out_dir):
    out = Path(out_dir)

    # 12-point fixture for pearson().
    xs = ["1.5", "2", "3.25", "4", "5.5", "6", "7.75", "8", "9.5", "10", "11.25", "12"]
    ys = ["2.1", "3.9", "6.2", "7.8", "11.5", "11.9", "16.4", "15.8", "19.9", "20.3", "22.1", "25.6"]
    r = pearson([Fraction(x) for x in xs], [Fraction(y) for y in ys])
    with open(out / "pearson_fixture.csv", "w", newline="\n") as f:
        f.write("x,y\n")
        for x, y in zip(xs, ys):
            f.write(f"{x},{y}\n")
    with open(out / "pearson_fixture_expected.txt", "w", newline="\n") as f:
        f.write(f"{r}\n")

    # 12 run records: 1 dataset x 6 strategies x 2 repetitions, plus 6 metric rows.
    strategies = ["RVC", "1D", "2D", "CRVC", "SC", "DC"]
    walls = {
        "RVC": ("0.84", "0.92"), "1D": ("0.61", "0.65"), "2D": ("0.42", "0.40"),
        "CRVC": ("0.80", "0.86"), "SC": ("0.55", "0.59"), "DC": ("0.47", "0.45"),
    }
    msgs = {"RVC": (9100, 9100), "1D": (6400, 6400), "2D": (3900, 3900),
            "CRVC": (8700, 8700), "SC": (6000, 6000), "DC": (4300, 4300)}
    metrics = {  # balance, non_cut, cut, comm_cost, part_stddev
        "RVC": ("1.0625", 110, 890, 5230, "3.5"), "1D": ("1.3125", 260, 740, 3610, "9.25"),
        "2D": ("1.125", 330, 670, 2100, "5.5"), "CRVC": ("1.0625", 140, 860, 4980, "3.75"),
        "SC": ("1.5", 280, 720, 3350, "12.5"), "DC": ("1.4375", 310, 690, 2450, "11"),
    }
    with open(out / "correlate_fixture_runs.csv", "w", newline="\n") as f:
        f.write("algorithm,dataset,strategy,num_partitions,supersteps,gather_msgs,scatter_msgs,wall_time_s,"
                "converged,repetition,seed\n")
        for s in strategies:
            for rep in range(2):
                total = msgs[s][rep]
                gather = total // 3
                f.write(f"PR,fixture,{s},16,10,{gather},{total - gather},{walls[s][rep]},true,{rep},7\n")
    with open(out / "correlate_fixture_metrics.csv", "w", newline="\n") as f:
        f.write("dataset,strategy,num_partitions,balance,non_cut,cut,comm_cost,part_stddev\n")
        for s in strategies:
            b, nc, c, cc, sd = metrics[s]
            f.write(f"fixture,{s},16,{b},{nc},{c},{cc},{sd}\n")

    mean_wall = [(Fraction(walls[s][0]) + Fraction(walls[s][1])) / 2 for s in strategies]
    mean_msgs = [Fraction(msgs[s][0] + msgs[s][1], 2) for s in strategies]
    names = ["balance", "non_cut", "cut", "comm_cost", "part_stddev"]
    with open(out / "correlate_fixture_expected.csv", "w", newline="\n") as f:
        f.write("metric,target,pearson_r\n")
        for i, name in enumerate(names):
            col = [Fraction(metrics[s][i]) for s in strategies]
            f.write(f"{name},wall_time,{pearson(col, mean_wall)}\n")
            f.write(f"{name},messages,{pearson(col, mean_msgs)}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
