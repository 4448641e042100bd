"""Solve both default fronts and print them with hull labels and timings."""
import argparse
import time

from seatreasure import EnvConfig
from seatreasure.solver import SolveStats, solve_bi_front, solve_tri_front, with_hull_labels


def show(title, front, elapsed):
    print(f"== {title}: {len(front)} points in {elapsed:.2f}s")
    for p in front:
        print(f"  {str(p.rewards):<22} {p.hull_label or '-':<9} {len(p.actions)} actions")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--max-steps", type=int, default=1000)
    args = ap.parse_args()

    stats = SolveStats()
    t0 = time.perf_counter()
    tri = solve_tri_front(EnvConfig(max_steps=args.max_steps), threads=args.threads, stats=stats)
    show("time, treasure, fuel", with_hull_labels(tri), time.perf_counter() - t0)
    print(f"  labels={stats.labels_created} layers={stats.layers} nodes={stats.nodes}")

    t0 = time.perf_counter()
    bi = solve_bi_front(EnvConfig.vamplew(max_steps=args.max_steps))
    show("time, treasure", with_hull_labels(bi), time.perf_counter() - t0)


if __name__ == "__main__":
    main()
