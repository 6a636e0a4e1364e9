"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints the best-of-``repeat`` time of each kernel on each backend and the
speedup of the compiled one. Results are checked for equality first.
"""
import argparse
import timeit

from latticecount import kernels

CASES = [
    ("delannoy_grid", (400, 400)),
    ("central_grid", (1000,)),
    ("central_recurrence", (20000,)),
    ("delannoy_binomial_sum", (3000, 3000)),
    ("walk_layers", ([(1, 1), (1, -1), (2, 0)], 600, -600, 600)),
    ("strip_absorption", (30, 6000)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled backend not built; timing the Python kernels only")
    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, argv in CASES:
        results = {b: getattr(mod, name)(*argv) for b, mod in backends.items()}
        first = next(iter(results.values()))
        assert all(r == first for r in results.values()), f"{name}: backends disagree"
        times = {}
        for b, mod in backends.items():
            fn = getattr(mod, name)
            times[b] = min(timeit.repeat(lambda: fn(*argv), number=1, repeat=args.repeat))
        line = f"{name:<24}" + "".join(f"{times[b]:>12.4f}" for b in backends)
        if len(backends) > 1:
            line += f"   {times['python'] / times['compiled']:6.2f}x"
        print(line)


if __name__ == "__main__":
    main()
