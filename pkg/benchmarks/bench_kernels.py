"""Compare the compiled and pure-Python residue kernels.

    python benchmarks/bench_kernels.py [--order 89400] [--modulus 11]

The default workload is the mod-11 expansion behind the extended
p2(297n+t) check: (q;q)^10 / ((q^2;q^2)(q^11;q^11)) up to 297*301.
"""
import argparse
import time

from cubicpart import _pykernels
from cubicpart.series import euler_factor, parse_eta_spec

try:
    from cubicpart import _ckernels
except ImportError:
    _ckernels = None


def expand_with(kernels, spec, order, u):
    coeffs = [1] + [0] * order
    for delta, r in spec.terms:
        e = [c % u for c in euler_factor(delta, order)]
        for _ in range(abs(r)):
            coeffs = kernels.mul_mod(e, coeffs, order, u) if r > 0 else kernels.div_mod(coeffs, e, order, u, 1)
    return coeffs


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=297 * 301)
    parser.add_argument("--modulus", type=int, default=11)
    parser.add_argument("--dense-order", type=int, default=4000)
    args = parser.parse_args()

    spec = parse_eta_spec("1:10,2:-1,11:-1")
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    results = {}
    print(f"{'workload':<34}{'backend':<10}{'seconds':>10}")
    for name, k in backends:
        res, secs = timed(expand_with, k, spec, args.order, args.modulus)
        results.setdefault("sparse", []).append(res)
        print(f"{'sparse expand order=' + str(args.order):<34}{name:<10}{secs:>10.3f}")
    a = [(7 * i + 3) % args.modulus for i in range(args.dense_order + 1)]
    for name, k in backends:
        res, secs = timed(k.mul_mod, a, a, args.dense_order, args.modulus)
        results.setdefault("dense", []).append(res)
        print(f"{'dense mul order=' + str(args.dense_order):<34}{name:<10}{secs:>10.3f}")
    for key, outs in results.items():
        assert all(o == outs[0] for o in outs), f"backends disagree on {key}"
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
