"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel call on the same input under both backends and
checks that the outputs agree.
"""

import argparse
import time

from symmetry_atlas import families as fam
from symmetry_atlas.graph import circulant
from symmetry_atlas.kernels import backends


def _cases():
    lq3 = fam.line_graph_cube()
    dodec = fam.dodecahedron()
    c16 = circulant(16, (1, 2, 5))
    out = []
    for name, g in (("line_graph_cube", lq3), ("dodecahedron", dodec), ("circulant(16,1,2,5)", c16)):
        eu = [u for u, _ in g.edges()]
        ev = [v for _, v in g.edges()]
        out.append((f"refine {name}", lambda k, g=g: k.refine(list(g.adj), [0] + [1] * (g.n - 1))))
        out.append((f"separators k=3 {name}", lambda k, g=g: k.separators(list(g.adj), 3)))
        for j in (0, 2, 4):
            out.append((f"mixed j={j} {name}",
                        lambda k, g=g, eu=eu, ev=ev, j=j: k.mixed_separators(list(g.adj), eu, ev, j, 4 - j, True)))
    return out


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    impls = backends()
    if "cython" not in impls:
        print("compiled extension not built; only the Python backend is available")
    names = list(impls)
    print(f"{'case':40s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for label, fn in _cases():
        times = {}
        results = {}
        for n in names:
            times[n], results[n] = _time(lambda: fn(impls[n]), args.repeat)
        agree = len({repr(sorted(map(repr, r)) if isinstance(r, list) else r) for r in results.values()}) == 1
        speed = times["python"] / times["cython"] if "cython" in times and times["cython"] > 0 else float("nan")
        row = f"{label:40s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names) + f"{speed:9.1f}x"
        print(row + ("" if agree else "  MISMATCH"))


if __name__ == "__main__":
    main()
