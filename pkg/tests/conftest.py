"""Shared test helpers: seeded random scalars, vectors and base changes."""

from fractions import Fraction

from schurdefect.fields import QQ, PrimeField
from schurdefect.linalg import Matrix


def random_scalar(field, rng, zero_ok=True):
    if isinstance(field, PrimeField):
        lo = 0 if zero_ok else 1
        return rng.randrange(lo, field.p)
    num = rng.randint(-4, 4)
    if not zero_ok and num == 0:
        num = 1
    den = rng.choice((1, 1, 1, 2, 3))
    return Fraction(num, den)


def random_vector(field, n, rng):
    return [random_scalar(field, rng) for _ in range(n)]


def random_invertible(field, n, rng, steps=None):
    """Product of random transvections, swaps and unit scalings; exact and
    sparse enough to keep base-changed tensors small."""
    if steps is None:
        steps = max(4, (3 * n) // 2)
    m = [[field.one if i == j else field.zero for j in range(n)]
         for i in range(n)]
    if n < 2:
        return Matrix(field, m, n)
    for _ in range(steps):
        op = rng.random()
        if op < 0.7:
            r, s = rng.sample(range(n), 2)
            lam = random_scalar(field, rng, zero_ok=False)
            row_s = m[s]
            m[r] = [field.add(x, field.mul(lam, y))
                    for x, y in zip(m[r], row_s)]
        elif op < 0.85:
            r, s = rng.sample(range(n), 2)
            m[r], m[s] = m[s], m[r]
        else:
            r = rng.randrange(n)
            if isinstance(field, PrimeField):
                u = rng.randrange(1, field.p)
            else:
                u = rng.choice((Fraction(-1), Fraction(2), Fraction(-2),
                                Fraction(1, 2)))
            m[r] = [field.mul(u, x) for x in m[r]]
    return Matrix(field, m, n)


def fields_for_tests():
    from schurdefect.fields import GF
    return [QQ, GF(2), GF(3), GF(5)]
