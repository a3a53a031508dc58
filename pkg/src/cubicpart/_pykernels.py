"""Pure-Python residue-ring kernels; same contract as the compiled ones."""

MAX_MODULUS = 2**31


def mul_mod(a, b, order, u):
    """Truncated product of two residue sequences modulo ``u``."""
    la = min(len(a), order + 1)
    lb = min(len(b), order + 1)
    acc = [0] * (order + 1)
    for i in range(la):
        x = a[i]
        if not x:
            continue
        for j in range(min(lb, order - i + 1)):
            acc[i + j] += x * b[j]
    return [c % u for c in acc]


def div_mod(a, b, order, u, b0_inv):
    """Truncated quotient ``a / b`` modulo ``u``; ``b0_inv`` inverts ``b[0]``."""
    la = min(len(a), order + 1)
    terms = [(j, b[j]) for j in range(1, min(len(b), order + 1)) if b[j]]
    c = [0] * (order + 1)
    for n in range(order + 1):
        s = a[n] if n < la else 0
        for j, v in terms:
            if j > n:
                break
            s -= v * c[n - j]
        c[n] = s * b0_inv % u
    return c
