"""The compiled and pure-Python residue kernels must agree exactly."""
import random

import pytest

from cubicpart import _backend, _pykernels
from cubicpart.series import euler_factor

from oracles import poly_mul

backends = [pytest.param(_pykernels, id="python")]
try:
    from cubicpart import _ckernels

    backends.append(pytest.param(_ckernels, id="cython"))
except ImportError:
    pass


def test_backend_selected():
    assert _backend.NAME in ("cython", "python")


@pytest.mark.parametrize("k", backends)
@pytest.mark.parametrize("u", [2, 11, 1009, 2**31 - 1, 2**31])
def test_mul_mod_matches_schoolbook(k, u):
    rng = random.Random(u)
    for order in (0, 1, 7, 120):
        a = [rng.randrange(u) for _ in range(order + 1)]
        b = [rng.randrange(u) for _ in range(rng.randint(1, order + 1))]
        assert k.mul_mod(a, b, order, u) == [c % u for c in poly_mul(a, b + [0] * (order + 1 - len(b)), order)]


@pytest.mark.parametrize("k", backends)
@pytest.mark.parametrize("u", [3, 11, 2**31 - 1])
def test_div_mod_inverts_mul_mod(k, u):
    rng = random.Random(7 * u)
    order = 150
    b = [rng.randrange(u) for _ in range(order + 1)]
    b[0] = 1 if u == 3 else 5
    b0_inv = pow(b[0], -1, u)
    a = [rng.randrange(u) for _ in range(order + 1)]
    q = k.div_mod(a, b, order, u, b0_inv)
    assert k.mul_mod(q, b, order, u) == a


@pytest.mark.parametrize("k", backends)
def test_div_by_sparse_euler_factor_gives_partitions_mod_u(k):
    order = 2000
    e = [c % 1000003 for c in euler_factor(1, order)]
    one = [1] + [0] * order
    ours = k.div_mod(one, e, order, 1000003, 1)
    ref = _pykernels.div_mod(one, e, order, 1000003, 1)
    assert ours == ref
    assert ours[100] == 190569292 % 1000003


def test_backends_agree_on_large_input():
    if len(backends) < 2:
        pytest.skip("compiled kernels not built")
    rng = random.Random(1)
    u, order = 11, 3000
    a = [rng.randrange(u) for _ in range(order + 1)]
    b = [rng.randrange(u) for _ in range(order + 1)]
    b[0] = 1
    assert _ckernels.mul_mod(a, b, order, u) == _pykernels.mul_mod(a, b, order, u)
    assert _ckernels.div_mod(a, b, order, u, 1) == _pykernels.div_mod(a, b, order, u, 1)
