"""Construction-time scaling on random cubic graphs.

Times the construction alone (no verification: the verifier is a
deliberately quadratic oracle meant for test sizes).  Doubling the vertex
count should roughly double the time.
"""

import time

from cubicbox import construct_boxes, random_cubic


def main():
    construct_boxes(random_cubic(64, 0))  # compile warm-up
    print(f"{'n':>9} {'seconds':>9} {'us/vertex':>10}")
    prev = None
    for n in (50_000, 100_000, 200_000, 400_000, 800_000):
        g = random_cubic(n, seed=1)
        t0 = time.perf_counter()
        construct_boxes(g)
        dt = time.perf_counter() - t0
        ratio = f"  (x{dt / prev:.2f})" if prev else ""
        print(f"{n:>9} {dt:>9.3f} {dt / n * 1e6:>10.2f}{ratio}")
        prev = dt


if __name__ == "__main__":
    main()
