"""Shared test utilities: independent oracles kept deliberately naive."""

from fractions import Fraction
from random import Random

from derleib.algebra import Algebra
from derleib.exactlin import Mat, Q


def charpoly(m: Mat) -> list:
    """Characteristic polynomial coefficients [c_n..c_0] (monic, c_n = 1)
    via the Faddeev-LeVerrier recurrence; exact."""
    n = m.rows
    coeffs = [Fraction(1)]
    mk = m
    ck = -mk.trace()
    coeffs.append(ck)
    for k in range(2, n + 1):
        mk = m * (mk + Mat.identity(n, m.field).scale(ck))
        ck = -mk.trace() / k
        coeffs.append(ck)
    return coeffs


def mat_power_is_zero(m: Mat, exponent: int) -> bool:
    acc = Mat.identity(m.rows, m.field)
    for _ in range(exponent):
        acc = acc * m
        if acc.is_zero():
            return True
    return acc.is_zero()


def ad_nilpotent(alg: Algebra, vec) -> bool:
    return mat_power_is_zero(alg.adjoint(vec, "left"), alg.dim)


def random_vector(rng: Random, dim: int):
    return tuple(Fraction(rng.randint(-3, 3), rng.choice((1, 2)))
                 for _ in range(dim))


def random_solvable_lie(rng: Random) -> tuple:
    """A random solvable Lie algebra of dim <= 5: a weighted diagonal element
    acting on a random two-step nilpotent part.

    Returns (algebra, expected_nilradical_indices); the expected nilradical
    is everything but the diagonal element, or the whole algebra when all
    weights vanish.
    """
    p = rng.randint(1, 3)
    max_cent = min(2, 4 - p, p * (p - 1) // 2)
    ncent = rng.randint(0, max_cent) if max_cent > 0 else 0
    weights = [rng.randint(-2, 2) for _ in range(p)]
    pairs = [(i, j) for i in range(p) for j in range(i + 1, p)]
    rng.shuffle(pairs)
    chosen = pairs[:ncent]
    dim = 1 + p + ncent
    labels = ["t"] + ["g%d" % (i + 1) for i in range(p)] \
        + ["z%d" % (k + 1) for k in range(ncent)]
    brackets = {}

    def add(i, j, k, cf):
        brackets.setdefault((i, j), []).append((k, Fraction(cf)))

    for i, w in enumerate(weights):
        if w:
            add(0, 1 + i, 1 + i, w)
            add(1 + i, 0, 1 + i, -w)
    for k, (i, j) in enumerate(chosen):
        zidx = 1 + p + k
        add(1 + i, 1 + j, zidx, 1)
        add(1 + j, 1 + i, zidx, -1)
        wz = weights[i] + weights[j]
        if wz:
            add(0, zidx, zidx, wz)
            add(zidx, 0, zidx, -wz)
    alg = Algebra.from_brackets(Q, labels, brackets)
    assert alg.kind.lie
    if any(weights):
        expected = list(range(1, dim))
    else:
        expected = list(range(dim))
    return alg, expected
