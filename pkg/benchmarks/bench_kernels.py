"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from bbquiver import _pykernels
from bbquiver.bracket import _flat, crossing_terms
from bbquiver.diagram import from_braid
from bbquiver.fixtures import load_biquandle, load_bracket
from bbquiver.homset import _kernel_args, enumerate_colorings
from bbquiver.kernels import compiled_backend
from bbquiver.ring import ModRing


def cases():
    alex = load_biquandle("alex3.biq")
    z2 = load_biquandle("z2.biq")
    bb = load_bracket("alex3_z3.brk", alex)

    big = from_braid(4, [1, -2, 3, 1, -2, 3, -1, 2, -3, 1, 2, 3])
    col_args = _kernel_args(big, alex)
    yield "colorings: 12 crossings, |X|=3", lambda k: k.enumerate_colorings(*col_args)

    d = from_braid(3, [1, -2, 1, -2, 1, -2, 1, 2, 1, -2, 2, 1, -2, 1])
    c = enumerate_colorings(d, alex)[1]
    pa, pb, ca, cb = crossing_terms(d, c, bb)
    ss_args = (d.num_semiarcs, d.free_loops, pa, pb, ca, cb, bb.delta.value, bb.modulus)
    yield "state sum: 14 crossings (16384 states)", lambda k: k.state_sum(*ss_args)

    units = ModRing(7).units()
    U, O = _flat(z2.under), _flat(z2.over)
    yield "bracket search: Z2 over Z/7", lambda k: [k.search_chunk(2, U, O, 7, units, u, 1 << 60) for u in units]

    units4 = ModRing(4).units()
    Ua, Oa = _flat(alex.under), _flat(alex.over)
    yield "bracket search: alex3 over Z/4", lambda k: [k.search_chunk(3, Ua, Oa, 4, units4, u, 1 << 60) for u in units4]


def _norm(x):
    if isinstance(x, (list, tuple)):
        return tuple(_norm(v) for v in x)
    return x


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    ck = compiled_backend()
    if ck is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'case':42s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, run in cases():
        tp, rp = best_of(lambda: run(_pykernels), args.repeat)
        if ck is None:
            print(f"{name:42s} {tp:10.4f}")
            continue
        tc, rc = best_of(lambda: run(ck), args.repeat)
        assert _norm(rp) == _norm(rc), f"backends disagree on {name}"
        print(f"{name:42s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
