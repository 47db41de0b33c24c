"""Registry of machine-checkable structural facts about the catalog families.

Every claim states a documented quantitative fact (a dimension formula, a
named basis, an inclusion, a structural invariant), instantiates it at
concrete parameters (family, n, a), runs it against the engine, and reports
confirmed / refuted / discrepancy / skipped.  The engine, not the statement,
is ground truth: a claim pre-flagged as a suspected misprint reports a
mismatch as ``discrepancy``; everything else reports ``refuted``.

Checkers use only public operations of the other modules, so a failure here
localizes a real mismatch.
"""

from __future__ import annotations

import hashlib
import time
import zlib
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Optional

from . import __version__
from .algebra import Algebra
from .catalog import (
    GROUPED,
    INTERLEAVED,
    dieudonne,
    heisenberg_leibniz,
    heisenberg_lie,
    jordan,
    kronecker,
    realify_derivation,
    realify_heisenberg,
)
from .derivations import (
    MatrixLieAlgebra,
    almost_inner_genus1,
    commutator,
    der_algebra,
    inner_derivations,
    is_derivation,
)
from .dsl import Report
from .exactlin import (
    GaussRat,
    Mat,
    Q,
    QI,
    Subspace,
    format_scalar,
)
from .liestruct import nilradical, radical, verify_levi

DEFAULT_A = (Fraction(2), Fraction(1, 2), Fraction(-3),
             Fraction(1), Fraction(-1), Fraction(0))

CONFIRMED = "confirmed"
REFUTED = "refuted"
DISCREPANCY = "discrepancy"
SKIPPED = "skipped"


# ---------------------------------------------------------------------------
# named generator matrices
# ---------------------------------------------------------------------------

def _unit(dim: int, r: int, c: int, field: str = Q) -> Mat:
    """Matrix unit with 1-based indices."""
    return Mat.unit(dim, dim, r - 1, c - 1, field)


def _msum(dim: int, terms, field: str = Q) -> Mat:
    acc = Mat.zero(dim, dim, field)
    for r, c, v in terms:
        acc = acc + Mat.unit(dim, dim, r - 1, c - 1, field, v)
    return acc


def heis_grouped_gens(n: int) -> dict:
    """Named derivation basis of the Jordan-parameter family, grouped basis."""
    dim = 2 * n + 1
    g = {}
    g["x"] = _msum(dim, [(k, k, 1) for k in range(1, n + 1)] + [(dim, dim, 1)])
    g["y"] = _msum(dim, [(n + k, n + k, 1) for k in range(1, n + 1)]
                   + [(dim, dim, 1)])
    for i in range(1, n):
        g["E%d" % i] = _msum(dim,
                             [(k, k + i, 1) for k in range(1, n - i + 1)]
                             + [(n + i + k, n + k, -1) for k in range(1, n - i + 1)])
    for i in range(1, n + 1):
        g["A%d" % i] = _unit(dim, dim, i)
        g["B%d" % i] = _unit(dim, dim, n + i)
    return g


def _interleaved_core_gens(n: int) -> dict:
    """x, y, E_i, A_i, B_i in the pairwise-interleaved basis {e1,f1,...,z}."""
    dim = 2 * n + 1
    g = {}
    g["x"] = _msum(dim, [(2 * k - 1, 2 * k - 1, 1) for k in range(1, n + 1)]
                   + [(dim, dim, 1)])
    g["y"] = _msum(dim, [(2 * k, 2 * k, 1) for k in range(1, n + 1)]
                   + [(dim, dim, 1)])
    for i in range(1, n):
        terms = []
        for k in range(0, n - i):
            terms.append((2 * (k + i + 1), 2 * (k + 1), 1))
            terms.append((2 * k + 1, 2 * (k + i) + 1, -1))
        g["E%d" % i] = _msum(dim, terms)
    for i in range(1, n + 1):
        g["A%d" % i] = _unit(dim, dim, 2 * i - 1)
        g["B%d" % i] = _unit(dim, dim, 2 * i)
    return g


def j0_gens(n: int) -> dict:
    """Named derivation basis for the nilpotent-Jordan-parameter family,
    interleaved basis; includes the c_h / b_h mixing generators."""
    dim = 2 * n + 1
    g = _interleaved_core_gens(n)
    c_top = n if n % 2 == 0 else n + 1
    for h in range(2, c_top + 1, 2):
        g["c%d" % h] = _msum(dim, [(2 * (h - i - 1) - 1, 2 * (1 + i), (-1) ** i)
                                   for i in range(0, h - 1)])
    b_low = n + 2 if n % 2 == 0 else n + 1
    for h in range(b_low, 2 * n + 1, 2):
        g["b%d" % h] = _msum(dim, [(2 * (n - i), 2 * (h - n + i) - 1, (-1) ** i)
                                   for i in range(0, 2 * n - h + 1)])
    return g


def kron_gens(n: int) -> dict:
    """Named derivation basis of the Kronecker family, interleaved basis."""
    dim = 2 * n + 1
    g = _interleaved_core_gens(n)
    c_top = n + 1 if n % 2 == 0 else n
    for h in range(3, c_top + 1, 2):
        g["c%d" % h] = _msum(dim, [(2 * (h - i - 1) - 1, 2 * (1 + i), (-1) ** (i + 1))
                                   for i in range(0, h - 1)])
    b_low = n + 1 if n % 2 == 0 else n + 2
    for h in range(b_low, 2 * n, 2):
        g["b%d" % h] = _msum(dim, [(2 * (n - i), 2 * (h - n + i) - 1, (-1) ** (i + 1))
                                   for i in range(0, 2 * n - h + 1)])
    return g


def l5r_gens() -> dict:
    """Named derivation basis of the realified five-dimensional algebra."""
    g = {}
    g["x"] = _msum(5, [(1, 1, 1), (3, 3, 1), (5, 5, 1)])
    g["y"] = _msum(5, [(2, 2, 1), (4, 4, 1), (5, 5, 1)])
    g["E"] = _msum(5, [(1, 3, 1), (2, 4, 1), (3, 1, -1), (4, 2, -1)])
    g["F"] = _msum(5, [(1, 2, 1), (3, 4, 1)])
    g["G"] = _msum(5, [(2, 1, 1), (4, 3, 1)])
    for i in (1, 2):
        g["A%d" % i] = _unit(5, 5, 2 * i - 1)
        g["B%d" % i] = _unit(5, 5, 2 * i)
    return g


def dieu_gens(n: int) -> dict:
    """Named derivation basis of the Dieudonne family."""
    dim = 2 * n + 2
    g = {}
    g["x"] = _msum(dim, [(i, i, 1) for i in range(1, n + 2)] + [(dim, dim, 1)])
    g["y"] = _msum(dim, [(i, i, 1) for i in range(n + 2, dim + 1)])
    for i in range(1, (n + 1) // 2 + 1):
        g["E%d" % i] = _msum(dim, [(k, n + 2 * i + 1 - k, (-1) ** (k + 1))
                                   for k in range(1, 2 * i)])
    if n % 2 == 0:
        for j in range(1, n // 2 + 1):
            g["E%d" % (n // 2 + j)] = _msum(
                dim, [(n + 2 - k, n + 2 * j - 1 + k, (-1) ** (k + 1))
                      for k in range(1, n + 3 - 2 * j)])
    else:
        for j in range(1, (n - 1) // 2 + 1):
            g["E%d" % ((n + 1) // 2 + j)] = _msum(
                dim, [(n + 2 - k, n + 2 * j + k, (-1) ** k)
                      for k in range(1, n + 2 - 2 * j)])
    for i in range(1, 2 * n + 2):
        g["A%d" % i] = _unit(dim, dim, i)
    return g


# ---------------------------------------------------------------------------
# cached family/derivation access
# ---------------------------------------------------------------------------

def _heis(n: int, a: Fraction, order: str = GROUPED) -> Algebra:
    return heisenberg_leibniz(n, jordan(a, n), order)


def _der(alg: Algebra) -> MatrixLieAlgebra:
    return der_algebra(alg)


# ---------------------------------------------------------------------------
# check bookkeeping
# ---------------------------------------------------------------------------

class _Checks:
    """Collects expected-vs-actual comparisons for one claim instance."""

    def __init__(self):
        self.problems = []
        self.notes = []

    def eq(self, label: str, expected, actual):
        if expected != actual:
            self.problems.append("%s: expected %s, actual %s"
                                 % (label, expected, actual))

    def true(self, label: str, cond: bool, detail: str = ""):
        if not cond:
            self.problems.append(label + ((": " + detail) if detail else ""))

    def spans_equal(self, label: str, expected: Optional[Subspace],
                    actual: Subspace):
        if expected is None:
            self.problems.append("%s: a stated generator is not in the "
                                 "computed algebra" % label)
        elif expected != actual:
            self.problems.append("%s: stated span %s != computed span %s"
                                 % (label, _fmt_sub(expected), _fmt_sub(actual)))

    def result(self, summary: str, flagged: bool = False):
        if not self.problems:
            return (CONFIRMED, summary, summary)
        status = DISCREPANCY if flagged else REFUTED
        return (status, summary, "; ".join(self.problems))


def _fmt_vec(v) -> str:
    return "[" + ", ".join(format_scalar(x) for x in v) + "]"


def _fmt_sub(s: Subspace) -> str:
    return "{" + "; ".join(_fmt_vec(row) for row in s.basis) + "}"


def _named_span(der: MatrixLieAlgebra, gens: dict, names) -> Optional[Subspace]:
    return der.coords_span([gens[nm] for nm in names])


def _comm_table_ok(ck: _Checks, gens: dict, expected: dict):
    """Verify the complete commutator table of the named generators.

    ``expected`` maps ordered name pairs to matrices; unlisted pairs must
    commute.  Only one orientation per pair needs listing.
    """
    names = sorted(gens)
    dim = next(iter(gens.values())).rows
    zero = Mat.zero(dim, dim, next(iter(gens.values())).field)
    for idx, p in enumerate(names):
        for q in names[idx + 1:]:
            got = commutator(gens[p], gens[q])
            if (p, q) in expected:
                want = expected[(p, q)]
            elif (q, p) in expected:
                want = -expected[(q, p)]
            else:
                want = zero
            if got != want:
                ck.problems.append("[%s,%s] differs from the stated table"
                                   % (p, q))


# ---------------------------------------------------------------------------
# claim checkers
# ---------------------------------------------------------------------------

def _check_h1(params, seed):
    n, a = params["n"], params["a"]
    der = _der(_heis(n, a))
    ck = _Checks()
    ck.eq("dim Der", 3 * n + 1, der.dim)
    return ck.result("dim Der = 3n+1 = %d" % (3 * n + 1))


def _check_h2(params, seed):
    n, a = params["n"], params["a"]
    alg = _heis(n, a)
    der = _der(alg)
    gens = heis_grouped_gens(n)
    ck = _Checks()
    for nm, m in gens.items():
        ck.true("%s is a derivation" % nm, is_derivation(m, alg))
    ck.spans_equal("named basis spans Der", _named_span(der, gens, gens),
                   Subspace.full(der.dim, alg.field))
    expected = {}
    for i in range(1, n + 1):
        expected[("x", "B%d" % i)] = gens["B%d" % i]
        expected[("y", "A%d" % i)] = gens["A%d" % i]
    for i in range(1, n):
        for k in range(i + 1, n + 1):
            expected[("E%d" % i, "B%d" % k)] = gens["B%d" % (k - i)]
        for k in range(1, n - i + 1):
            expected[("E%d" % i, "A%d" % k)] = -gens["A%d" % (i + k)]
    _comm_table_ok(ck, gens, expected)
    return ck.result("named basis spans Der and the bracket table matches")


def _check_h3(params, seed):
    n, a = params["n"], params["a"]
    der = _der(_heis(n, a))
    gens = heis_grouped_gens(n)
    struct = der.structure
    derived = struct.product_space(struct.full_space(), struct.full_space())
    ck = _Checks()
    ck.eq("dim [Der,Der]", 2 * n, derived.dim)
    ck.eq("[Der,Der] abelian", 0,
          struct.product_space(derived, derived).dim)
    names = ["A%d" % i for i in range(1, n + 1)] + ["B%d" % i for i in range(1, n + 1)]
    ck.spans_equal("[Der,Der] = <A,B>", _named_span(der, gens, names), derived)
    return ck.result("commutator ideal abelian of dimension 2n = %d" % (2 * n))


def _check_h4(params, seed):
    n, a = params["n"], params["a"]
    der = _der(_heis(n, a))
    gens = heis_grouped_gens(n)
    ck = _Checks()
    nilp, _ = der.structure.is_nilpotent()
    ck.true("Der not nilpotent", not nilp)
    nil = nilradical(der.structure)
    ck.eq("dim nilradical", 3 * n - 1, nil.dim)
    names = (["E%d" % i for i in range(1, n)]
             + ["A%d" % i for i in range(1, n + 1)]
             + ["B%d" % i for i in range(1, n + 1)])
    ck.spans_equal("nilradical = <E,A,B>", _named_span(der, gens, names), nil)
    return ck.result("not nilpotent; nilradical <E,A,B> of dim 3n-1 = %d"
                     % (3 * n - 1))


def _check_h5(params, seed):
    n, a = params["n"], params["a"]
    der = _der(_heis(n, a))
    ck = _Checks()
    ck.eq("dim Z(Der)", 0, der.structure.centers()[2].dim)
    return ck.result("Z(Der) = 0")


def _check_h6(params, seed):
    n, a = params["n"], params["a"]
    alg = _heis(n, a)
    inn = inner_derivations(alg)
    gens = heis_grouped_gens(n)
    ck = _Checks()
    if a == 1:
        h, k = 2, n
    elif a == -1:
        h, k = 1, n - 1
    else:
        h, k = 1, n
    names = (["A%d" % i for i in range(h, n + 1)]
             + ["B%d" % i for i in range(1, k + 1)])
    ck.eq("dim Inn", len(names), inn.dim)
    ck.spans_equal("Inn = <A_h..A_n, B_1..B_k>",
                   Subspace.span([gens[nm].flatten() for nm in names],
                                 inn.subspace.ambient_dim, alg.field),
                   inn.subspace)
    # stated left-multiplication formulas, grouped basis
    for i in range(1, n + 1):
        ad = alg.adjoint(alg.basis_vector(i - 1), "left")
        want = gens["B%d" % i].scale(1 + a)
        if i > 1:
            want = want + gens["B%d" % (i - 1)]
        ck.eq("ad_e%d" % i, want, ad)
    for j in range(1, n + 1):
        ad = alg.adjoint(alg.basis_vector(n + j - 1), "left")
        want = gens["A%d" % j].scale(a - 1)
        if j < n:
            want = want + gens["A%d" % (j + 1)]
        ck.eq("ad_f%d" % j, want, ad)
    return ck.result("Inn has the stated span (h=%d, k=%d; dim %d)"
                     % (h, k, len(names)))


def _check_h7(params, seed):
    n, a = params["n"], params["a"]
    alg = _heis(n, a)
    aid = almost_inner_genus1(alg)
    gens = heis_grouped_gens(n)
    names = (["A%d" % i for i in range(1, n + 1)]
             + ["B%d" % i for i in range(1, n + 1)])
    ck = _Checks()
    ck.eq("dim AIDer", 2 * n, aid.dim)
    ck.spans_equal("AIDer = <A,B>",
                   Subspace.span([gens[nm].flatten() for nm in names],
                                 aid.subspace.ambient_dim, alg.field),
                   aid.subspace)
    return ck.result("AIDer = <A,B> of dim 2n = %d for this a" % (2 * n))


def _check_h8(params, seed):
    n, a = params["n"], params["a"]
    d_h = _der(heisenberg_lie(n)).subspace
    d_j0 = _der(_heis(n, Fraction(0))).subspace
    d_ja = _der(_heis(n, a)).subspace
    ck = _Checks()
    ck.true("Der(heisenberg-lie) contains Der(J_0)", d_h.contains(d_j0))
    ck.true("Der(J_0) contains Der(J_a)", d_j0.contains(d_ja))
    return ck.result("derivation algebras nest: lie >= J_0 >= J_a")


def _check_z1(params, seed):
    n = params["n"]
    der = _der(_heis(n, Fraction(0), INTERLEAVED))
    ck = _Checks()
    ck.eq("dim Der", 4 * n + 1, der.dim)
    return ck.result("dim Der = 4n+1 = %d (n even)" % (4 * n + 1))


def _check_z2(params, seed):
    n = params["n"]
    der = _der(_heis(n, Fraction(0), INTERLEAVED))
    ck = _Checks()
    ck.eq("dim Der", 4 * n + 2, der.dim)
    return ck.result("dim Der = 4n+2 = %d (n odd)" % (4 * n + 2))


def _check_z3(params, seed):
    n = params["n"]
    der = _der(_heis(n, Fraction(0), INTERLEAVED))
    gens = j0_gens(n)
    ck = _Checks()
    solv, cls = der.structure.is_solvable()
    ck.true("Der solvable", solv)
    ck.eq("solvable class", n // 2 + 1, cls)
    nil = nilradical(der.structure)
    names = (["E%d" % i for i in range(1, n)]
             + ["c%d" % h for h in range(2, n + 1, 2)]
             + ["b%d" % h for h in range(n + 2, 2 * n + 1, 2)]
             + ["A%d" % i for i in range(1, n + 1)]
             + ["B%d" % i for i in range(1, n + 1)])
    ck.eq("dim nilradical", 4 * n - 1, nil.dim)
    ck.spans_equal("nilradical = <E,c,b,A,B>", _named_span(der, gens, names), nil)
    return ck.result("solvable of class n/2+1 = %d with the stated nilradical"
                     % (n // 2 + 1))


def _check_z4(params, seed):
    n = params["n"]
    der = _der(_heis(n, Fraction(0), INTERLEAVED))
    gens = j0_gens(n)
    struct = der.structure
    ck = _Checks()
    solv, _ = struct.is_solvable()
    ck.true("Der not solvable", not solv)
    s_names = ["c%d" % (n + 1), "b%d" % (n + 1)]
    xy = gens["x"] - gens["y"]
    span = der.coords_span([xy] + [gens[nm] for nm in s_names])
    if span is None:
        ck.true("Levi generators lie in Der", False)
    else:
        ck.true("Levi complement verified", verify_levi(struct, span).verified)
    rad_names = (["E%d" % i for i in range(1, n)]
                 + ["c%d" % h for h in range(2, n, 2)]
                 + ["b%d" % h for h in range(n + 3, 2 * n + 1, 2)]
                 + ["A%d" % i for i in range(1, n + 1)]
                 + ["B%d" % i for i in range(1, n + 1)])
    rad = radical(struct)
    xplusy = gens["x"] + gens["y"]
    rad_span = der.coords_span([xplusy] + [gens[nm] for nm in rad_names])
    ck.spans_equal("radical = <x+y,E,c,b,A,B>", rad_span, rad)
    nil = nilradical(struct)
    nil_span = _named_span(der, gens, rad_names)
    ck.spans_equal("nilradical = radical minus <x+y>", nil_span, nil)
    ck.eq("dim nilradical", 4 * n - 2, nil.dim)
    # flagged misprint probe: the stated sign of [B_i, b_k] for odd n
    for i in range(1, n + 1):
        for k in range(n + 1, 2 * n + 1, 2):
            if 1 <= k - i <= n and ("b%d" % k) in gens:
                got = commutator(gens["B%d" % i], gens["b%d" % k])
                want = gens["A%d" % (k - i)].scale((-1) ** (i + 1))
                if got != want:
                    return (DISCREPANCY,
                            "[B_i,b_k] = (-1)^(i+1) A_(k-i) as stated",
                            "[B%d,b%d] computes to the opposite sign" % (i, k))
    return ck.result("non-solvable; stated Levi/radical/nilradical verified")


def _check_z5(params, seed):
    n = params["n"]
    alg = _heis(n, Fraction(0), INTERLEAVED)
    inn = inner_derivations(alg)
    gens = j0_gens(n)
    names = (["A%d" % i for i in range(1, n + 1)]
             + ["B%d" % i for i in range(1, n + 1)])
    ck = _Checks()
    ck.eq("dim Inn", 2 * n, inn.dim)
    ck.eq("Inn abelian", 0, inn.structure.product_space(
        inn.structure.full_space(), inn.structure.full_space()).dim)
    ck.spans_equal("Inn = <A,B>",
                   Subspace.span([gens[nm].flatten() for nm in names],
                                 inn.subspace.ambient_dim, alg.field),
                   inn.subspace)
    return ck.result("Inn abelian of dimension 2n = %d" % (2 * n))


def _check_r1(params, seed):
    a = params["a"]
    alg = realify_heisenberg(1, GaussRat(a, 1), INTERLEAVED)
    der = _der(alg)
    gens = l5r_gens()
    ck = _Checks()
    ck.eq("dim Der", 7, der.dim)
    names = ["x", "y", "E", "A1", "A2", "B1", "B2"]
    ck.spans_equal("Der = <x,y,E,A,B>", _named_span(der, gens, names),
                   Subspace.full(der.dim, alg.field))
    inn = inner_derivations(alg)
    ab_names = ["A1", "A2", "B1", "B2"]
    ab = Subspace.span([gens[nm].flatten() for nm in ab_names],
                       inn.subspace.ambient_dim, alg.field)
    ck.spans_equal("Inn = <A,B>", ab, inn.subspace)
    nil = nilradical(der.structure)
    ck.spans_equal("nilradical = <A,B>", _named_span(der, gens, ab_names), nil)
    ck.eq("dim Z(Der)", 0, der.structure.centers()[2].dim)
    return ck.result("dim Der = 7; Inn = nilradical = <A,B>")


def _check_r2(params, seed):
    alg = realify_heisenberg(1, GaussRat(0, 1), INTERLEAVED)
    der = _der(alg)
    gens = l5r_gens()
    struct = der.structure
    ck = _Checks()
    ck.eq("dim Der", 9, der.dim)
    rad = radical(struct)
    rad_span = der.coords_span([gens["x"] + gens["y"], gens["E"],
                                gens["A1"], gens["A2"], gens["B1"], gens["B2"]])
    ck.spans_equal("radical = <x+y,E,A,B>", rad_span, rad)
    levi_span = der.coords_span([gens["x"] - gens["y"], gens["F"], gens["G"]])
    if levi_span is None:
        ck.true("Levi generators lie in Der", False)
    else:
        ck.true("Levi <x-y,F,G> verified", verify_levi(struct, levi_span).verified)
    nil = nilradical(struct)
    ab_names = ["A1", "A2", "B1", "B2"]
    ck.spans_equal("nilradical = <A,B>", _named_span(der, gens, ab_names), nil)
    ck.eq("nilradical abelian", 0, struct.product_space(nil, nil).dim)
    inn = inner_derivations(alg)
    ck.spans_equal("Inn = nilradical",
                   Subspace.span([gens[nm].flatten() for nm in ab_names],
                                 inn.subspace.ambient_dim, alg.field),
                   inn.subspace)
    return ck.result("dim Der = 9 with the stated radical, Levi and nilradical")


def _check_r3(params, seed):
    complex_alg = heisenberg_leibniz(1, jordan(GaussRat(0, 1), 1), GROUPED)
    real_alg = realify_heisenberg(1, GaussRat(0, 1), INTERLEAVED)
    der5 = _der(real_alg)
    rng = Random(seed)
    ck = _Checks()

    def rand_q():
        return Fraction(rng.randint(-3, 3), rng.choice((1, 2)))

    def rand_qi():
        return GaussRat(rand_q(), rand_q())

    def build(alpha, beta, mu, nu):
        gamma = alpha + beta
        return Mat.from_rows([[alpha, GaussRat(), GaussRat()],
                              [GaussRat(), beta, GaussRat()],
                              [mu, nu, gamma]], QI)

    for t in range(50):
        if t % 2 == 0:
            alpha = GaussRat(rand_q())
            d3 = build(alpha, alpha, rand_qi(), rand_qi())
        else:
            d3 = build(rand_qi(), rand_qi(), rand_qi(), rand_qi())
        alpha, beta = d3.at(0, 0), d3.at(1, 1)
        ck.true("sample %d is a derivation" % t, is_derivation(d3, complex_alg))
        real = realify_derivation(d3)
        member = real is not None and der5.contains(real)
        expected = (alpha == beta) and not alpha.im
        if member != expected:
            ck.problems.append(
                "sample %d: alpha=%s beta=%s, realification %s the real "
                "derivation algebra" % (t, format_scalar(alpha),
                                        format_scalar(beta),
                                        "enters" if member else "misses"))
    # the subfamily alpha = beta real spans the stated matrices
    fam = [build(GaussRat(1), GaussRat(1), GaussRat(), GaussRat()),
           build(GaussRat(), GaussRat(), GaussRat(1), GaussRat()),
           build(GaussRat(), GaussRat(), GaussRat(0, 1), GaussRat()),
           build(GaussRat(), GaussRat(), GaussRat(), GaussRat(1)),
           build(GaussRat(), GaussRat(), GaussRat(), GaussRat(0, 1))]
    real_fam = [realify_derivation(d) for d in fam]
    ck.true("family realifies", all(r is not None for r in real_fam))
    gens = l5r_gens()
    scaled = _msum(5, [(1, 1, 1), (2, 2, 1), (3, 3, 1), (4, 4, 1), (5, 5, 2)])
    want = Subspace.span([scaled.flatten()] +
                         [gens[nm].flatten() for nm in ("A1", "B1", "A2", "B2")],
                         25, Q)
    got = Subspace.span([r.flatten() for r in real_fam], 25, Q)
    ck.eq("iff-family span", want, got)
    ck.true("iff-family inside Der", all(der5.contains(r) for r in real_fam))
    return ck.result("realification enters Der iff alpha = beta real; "
                     "the family matches the corner-2a matrices")


def _check_k1(params, seed):
    n = params["n"]
    der = _der(kronecker(n, INTERLEAVED))
    ck = _Checks()
    ck.eq("dim Der", 4 * n, der.dim)
    return ck.result("dim Der = 4n = %d (n odd)" % (4 * n))


def _check_k2(params, seed):
    n = params["n"]
    der = _der(kronecker(n, INTERLEAVED))
    gens = kron_gens(n)
    ck = _Checks()
    ck.eq("dim Der", 4 * n + 1, der.dim)
    ck.spans_equal("named basis spans Der", _named_span(der, gens, gens),
                   Subspace.full(der.dim, Q))
    return ck.result("dim Der = 4n+1 = %d (n even, counted basis)" % (4 * n + 1))


def _check_k3(params, seed):
    n = params["n"]
    der = _der(kronecker(n, INTERLEAVED))
    gens = kron_gens(n)
    ck = _Checks()
    span = der.coords_span([gens["x"] - gens["y"],
                            gens["c%d" % (n + 1)], gens["b%d" % (n + 1)]])
    if span is None:
        ck.true("Levi generators lie in Der", False)
    else:
        res = verify_levi(der.structure, span)
        ck.true("Levi complement verified", res.verified, str(res))
    return ck.result("Levi complement <x-y, c_(n+1), b_(n+1)> verified")


def _check_k4(params, seed):
    n = params["n"]
    der = _der(kronecker(n, INTERLEAVED))
    gens = kron_gens(n)
    struct = der.structure
    ck = _Checks()
    solv, cls = struct.is_solvable()
    ck.true("Der solvable", solv)
    ck.eq("solvable class", (n + 1) // 2 + 1, cls)
    names = (["E%d" % i for i in range(1, n)]
             + ["c%d" % h for h in range(3, n + 1, 2)]
             + ["b%d" % h for h in range(n + 2, 2 * n, 2)]
             + ["A%d" % i for i in range(1, n + 1)]
             + ["B%d" % i for i in range(1, n + 1)])
    nil = nilradical(struct)
    ck.spans_equal("nilradical = <E,c,b,A,B>", _named_span(der, gens, names), nil)
    return ck.result("solvable of class (n+1)/2+1 = %d with stated nilradical"
                     % ((n + 1) // 2 + 1))


def _check_k5(params, seed):
    n = params["n"]
    alg = kronecker(n, INTERLEAVED)
    inn = inner_derivations(alg)
    gens = kron_gens(n)
    ck = _Checks()
    ck.eq("dim Inn", 2 * n, inn.dim)
    ck.eq("Inn abelian", 0, inn.structure.product_space(
        inn.structure.full_space(), inn.structure.full_space()).dim)
    names = (["A%d" % i for i in range(1, n + 1)]
             + ["B%d" % i for i in range(1, n + 1)])
    ck.spans_equal("Inn = <A,B>",
                   Subspace.span([gens[nm].flatten() for nm in names],
                                 inn.subspace.ambient_dim, alg.field),
                   inn.subspace)
    for i in range(1, n + 1):
        ad = alg.adjoint(alg.basis_vector(2 * i - 2), "left")
        want = gens["B%d" % i]
        if i > 1:
            want = want + gens["B%d" % (i - 1)]
        ck.eq("ad_e%d = B_(i-1)+B_i" % i, want, ad)
        ad = alg.adjoint(alg.basis_vector(2 * i - 1), "left")
        want = gens["A%d" % i]
        if i < n:
            want = want - gens["A%d" % (i + 1)]
        ck.eq("ad_f%d = A_i - A_(i+1)" % i, want, ad)
    return ck.result("Inn = <A,B> isomorphic to F^2n via the left multiplications")


def _check_k6(params, seed):
    n, a = params["n"], params["a"]
    d_j0 = _der(_heis(n, Fraction(0))).subspace
    d_k = _der(kronecker(n)).subspace
    d_ja = _der(_heis(n, a)).subspace
    ck = _Checks()
    ck.eq("Der(J_0) meet Der(kronecker) = Der(J_a)",
          d_ja, d_j0.intersect(d_k))
    return ck.result("Der(J_0) meet Der(kronecker) equals Der(J_a)")


def _check_d1(params, seed):
    n = params["n"]
    alg = dieudonne(n)
    der = _der(alg)
    gens = dieu_gens(n)
    ck = _Checks()
    ck.eq("dim Der", 3 * n + 3, der.dim)
    for nm, m in gens.items():
        ck.true("%s is a derivation" % nm, is_derivation(m, alg))
    ck.spans_equal("named basis spans Der", _named_span(der, gens, gens),
                   Subspace.full(der.dim, alg.field))
    if ck.problems:
        return ck.result("dim Der = 3n+3 = %d with the stated basis" % (3 * n + 3))
    # bracket table; the [x,E_i] = [E_i,y] = E_i reading is a flagged misprint probe
    expected = {}
    for i in range(1, n + 1):
        expected[("x", "E%d" % i)] = gens["E%d" % i]
        expected[("E%d" % i, "y")] = gens["E%d" % i]
    for h in range(1, n + 2):
        expected[("y", "A%d" % h)] = gens["A%d" % h]
    for k in range(n + 2, 2 * n + 2):
        expected[("x", "A%d" % k)] = gens["A%d" % k]
    dim = 2 * n + 2
    for i in range(1, n + 2):
        for k in range(1, n + 1):
            ek = gens["E%d" % k]
            row = [(c, ek.at(i - 1, c)) for c in range(dim) if ek.at(i - 1, c)]
            if not row:
                continue
            if len(row) != 1 or abs(row[0][1]) != 1 or not (n + 1 <= row[0][0] <= 2 * n):
                ck.problems.append("E%d row %d is not a single +-1 unit" % (k, i))
                continue
            c, eps = row[0]
            expected[("A%d" % i, "E%d" % k)] = gens["A%d" % (c + 1)].scale(eps)
    flagged = _Checks()
    _comm_table_ok(flagged, gens, expected)
    if flagged.problems:
        return (DISCREPANCY, "bracket table with [x,E_i] = [E_i,y] = E_i",
                "; ".join(flagged.problems))
    return ck.result("dim Der = 3n+3 = %d; stated basis and bracket table hold"
                     % (3 * n + 3))


def _check_d2(params, seed):
    n = params["n"]
    struct = _der(dieudonne(n)).structure
    ck = _Checks()
    solv, cls = struct.is_solvable()
    ck.true("Der solvable", solv)
    ck.eq("solvable class", 3, cls)
    dims = tuple(t.dim for t in struct.series("derived"))
    ck.eq("derived series dims", (3 * n + 3, 3 * n + 1, n, 0), dims)
    return ck.result("three-step solvable with derived dims (3n+3, 3n+1, n, 0)")


def _check_d3(params, seed):
    n = params["n"]
    struct = _der(dieudonne(n)).structure
    ck = _Checks()
    derived = struct.product_space(struct.full_space(), struct.full_space())
    ck.eq("nilradical = commutator ideal", derived, nilradical(struct))
    return ck.result("nilradical coincides with the commutator ideal")


def _check_d4(params, seed):
    n = params["n"]
    alg = dieudonne(n)
    dim = 2 * n + 2
    inn = inner_derivations(alg)
    gens = dieu_gens(n)
    ck = _Checks()
    ck.eq("dim Inn", 2 * n, inn.dim)
    cons = [gens["A%d" % k] - gens["A%d" % (k + 1)] for k in range(1, n + 1)]
    cons += [gens["A%d" % j] for j in range(n + 2, 2 * n + 2)]
    ck.spans_equal("Inn = {sum of mu over the first n+1 columns is zero}",
                   Subspace.span([m.flatten() for m in cons],
                                 inn.subspace.ambient_dim, alg.field),
                   inn.subspace)
    probe = gens["A%d" % (n + 1)]
    ck.true("mu_(n+1) probe is a derivation", is_derivation(probe, alg))
    ck.true("mu_(n+1) probe is almost inner",
            almost_inner_genus1(alg).contains(probe))
    ck.true("mu_(n+1) probe is not inner", not inn.contains(probe))
    return ck.result("Inn is the constrained bottom-row family of dim 2n; "
                     "the mu_(n+1) unit is almost inner but not inner")


def _check_d5(params, seed):
    n = params["n"]
    alg = dieudonne(n)
    der = _der(alg)
    gens = dieu_gens(n)
    ck = _Checks()
    ck.spans_equal("worked basis spans Der", _named_span(der, gens, gens),
                   Subspace.full(der.dim, alg.field))
    if n == 1:
        ck.eq("dim Der", 6, der.dim)
        e, a1, a2, a3 = gens["E1"], gens["A1"], gens["A2"], gens["A3"]
        table = {("x", "E1"): e, ("E1", "y"): e, ("x", "A3"): a3,
                 ("y", "A1"): a1, ("y", "A2"): a2, ("A1", "E1"): a3}
        _comm_table_ok(ck, gens, table)
        return ck.result("the six-dimensional worked example matches")
    if n == 2:
        ck.eq("dim Der", 9, der.dim)
        derived = der.structure.product_space(der.structure.full_space(),
                                              der.structure.full_space())
        names = ["E1", "E2"] + ["A%d" % i for i in range(1, 6)]
        ck.spans_equal("commutator ideal shape", _named_span(der, gens, names),
                       derived)
        return ck.result("the nine-dimensional worked example matches")
    # n == 3: the stated dimension 9 disagrees with the formula value 12
    if ck.problems:
        return ck.result("worked example at n=3")
    if der.dim != 9:
        return (DISCREPANCY, "dimension 9 as stated in the worked example",
                "computed dim Der = %d (= 3n+3)" % der.dim)
    return ck.result("worked example at n=3")


def _p1_algebra(params):
    fam = params["family"]
    n = params["n"]
    if fam == "heisenberg":
        return _heis(n, params["a"])
    if fam == "heisenberg-lie":
        return heisenberg_lie(n)
    if fam == "kronecker":
        return kronecker(n)
    if fam == "realify-heisenberg":
        a = params["a"]
        return realify_heisenberg(n, GaussRat(a, 1), INTERLEAVED)
    raise ValueError(fam)


def _check_p1(params, seed):
    alg = _p1_algebra(params)
    ck = _Checks()
    aid = almost_inner_genus1(alg)
    inn = inner_derivations(alg)
    ck.spans_equal("AIDer = Inn", inn.subspace, aid.subspace)
    return ck.result("every almost inner derivation is inner here")


def _check_p2(params, seed):
    fam = params["family"]
    n = params["n"]
    alg = _heis(n, params["a"]) if fam == "heisenberg" else dieudonne(n)
    ck = _Checks()
    aid = almost_inner_genus1(alg)
    inn = inner_derivations(alg)
    ck.true("Inn inside AIDer", aid.subspace.contains(inn.subspace))
    ck.eq("codimension of Inn in AIDer", 1, aid.dim - inn.dim)
    return ck.result("AIDer strictly contains Inn with codimension one")


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    id: str
    title: str
    statement: str
    domain: Callable
    check: Callable
    typo_flagged: bool = False


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    params: dict
    status: str
    expected: str
    actual: str
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "params": {k: (v if isinstance(v, (int, str)) else format_scalar(v))
                       for k, v in sorted(self.params.items())},
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "elapsed": self.elapsed,
        }


def _ns(nmax, lo=1, parity=None):
    out = []
    for n in range(lo, nmax + 1):
        if parity == "even" and n % 2:
            continue
        if parity == "odd" and n % 2 == 0:
            continue
        out.append(n)
    return out


def _dom_na(parity=None, nonzero=False, lo=1):
    def dom(nmax, a_values):
        avs = [a for a in a_values if not (nonzero and a == 0)]
        return [{"n": n, "a": a} for n in _ns(nmax, lo, parity) for a in avs]
    return dom


def _dom_n(parity=None, lo=1, cap=None):
    def dom(nmax, a_values):
        top = min(nmax, cap) if cap else nmax
        return [{"n": n} for n in _ns(top, lo, parity)]
    return dom


def _dom_fixed(*param_sets):
    def dom(nmax, a_values):
        return [dict(p) for p in param_sets if p.get("n", 1) <= nmax]
    return dom


def _dom_r1(nmax, a_values):
    return [{"a": a} for a in a_values if a != 0]


def _dom_p1(nmax, a_values):
    out = []
    for n in _ns(nmax):
        for a in a_values:
            if a not in (1, -1):
                out.append({"family": "heisenberg", "n": n, "a": a})
        out.append({"family": "heisenberg-lie", "n": n})
        out.append({"family": "kronecker", "n": n})
    out.append({"family": "realify-heisenberg", "n": 1, "a": Fraction(0)})
    out.append({"family": "realify-heisenberg", "n": 1, "a": Fraction(2)})
    return out


def _dom_p2(nmax, a_values):
    out = []
    for n in _ns(nmax):
        for a in (Fraction(1), Fraction(-1)):
            out.append({"family": "heisenberg", "n": n, "a": a})
        out.append({"family": "dieudonne", "n": n})
    return out


def registry() -> tuple:
    return (
        Claim("H1", "generic Jordan-parameter derivation dimension",
              "dim Der = 3n+1 for a nonzero parameter",
              _dom_na(nonzero=True), _check_h1),
        Claim("H2", "generic Jordan-parameter derivation basis",
              "the named matrices x, y, E_i, A_i, B_i span Der and satisfy "
              "the stated bracket table",
              _dom_na(nonzero=True), _check_h2),
        Claim("H3", "generic commutator ideal",
              "[Der,Der] is abelian of dimension 2n, spanned by A and B",
              _dom_na(nonzero=True), _check_h3),
        Claim("H4", "generic nilradical",
              "Der is not nilpotent; the nilradical is <E,A,B> of dim 3n-1",
              _dom_na(nonzero=True), _check_h4),
        Claim("H5", "generic center of Der",
              "Z(Der) is trivial", _dom_na(nonzero=True), _check_h5),
        Claim("H6", "inner derivations of the Jordan-parameter family",
              "dim Inn = 2n off a = +-1 and 2n-1 at a = +-1, with the "
              "stated generator pattern and left-multiplication formulas",
              _dom_na(nonzero=True), _check_h6),
        Claim("H7", "almost inner derivations of the Jordan-parameter family",
              "AIDer = <A,B> of dimension 2n for every tested a",
              _dom_na(), _check_h7),
        Claim("H8", "derivation algebra containments",
              "Der(heisenberg-lie) contains Der(J_0) contains Der(J_a)",
              _dom_na(nonzero=True), _check_h8),
        Claim("Z1", "zero-parameter dimension, n even",
              "dim Der = 4n+1", _dom_n("even"), _check_z1),
        Claim("Z2", "zero-parameter dimension, n odd",
              "dim Der = 4n+2", _dom_n("odd"), _check_z2),
        Claim("Z3", "zero-parameter solvability, n even",
              "Der is solvable of class n/2+1 with the stated nilradical",
              _dom_n("even"), _check_z3),
        Claim("Z4", "zero-parameter structure, n odd",
              "Der is not solvable; <x-y, c_(n+1), b_(n+1)> is a Levi "
              "complement and the stated radical/nilradical hold",
              _dom_n("odd"), _check_z4, typo_flagged=True),
        Claim("Z5", "zero-parameter inner derivations",
              "Inn is abelian of dimension 2n", _dom_n(), _check_z5),
        Claim("R1", "realified family, nonzero real part",
              "dim Der = 7 with generators <x,y,E,A,B>; Inn = nilradical = <A,B>",
              _dom_r1, _check_r1),
        Claim("R2", "realified family, zero real part",
              "dim Der = 9; radical <x+y,E,A,B>, Levi <x-y,F,G>, nilradical "
              "<A,B> abelian of dim 4", _dom_fixed({"n": 1}), _check_r2),
        Claim("R3", "realified derivations of the complex algebra",
              "the realification of a complex derivation lies in the real "
              "derivation algebra iff alpha = beta real; the family matches "
              "the corner-2a matrices", _dom_fixed({"n": 1}), _check_r3),
        Claim("K1", "Kronecker dimension, n odd",
              "dim Der = 4n", _dom_n("odd"), _check_k1),
        Claim("K2", "Kronecker dimension, n even",
              "dim Der = 4n+1 (count of the listed basis)",
              _dom_n("even"), _check_k2),
        Claim("K3", "Kronecker Levi complement, n even",
              "<x-y, c_(n+1), b_(n+1)> is a verified Levi complement",
              _dom_n("even"), _check_k3),
        Claim("K4", "Kronecker solvability, n odd",
              "solvable of class (n+1)/2+1 with the stated nilradical",
              _dom_n("odd"), _check_k4),
        Claim("K5", "Kronecker inner derivations",
              "Inn = <A,B> of dimension 2n via the left multiplications",
              _dom_n(), _check_k5),
        Claim("K6", "derivation-algebra intersection",
              "Der(J_0) meet Der(kronecker) equals Der(J_a)",
              _dom_na(nonzero=True), _check_k6),
        Claim("D1", "Dieudonne derivation dimension and basis",
              "dim Der = 3n+3 with the stated basis and bracket table",
              _dom_n(), _check_d1, typo_flagged=True),
        Claim("D2", "Dieudonne solvability",
              "three-step solvable with derived dims (3n+3, 3n+1, n, 0)",
              _dom_n(), _check_d2),
        Claim("D3", "Dieudonne nilradical",
              "the nilradical coincides with the commutator ideal",
              _dom_n(), _check_d3),
        Claim("D4", "Dieudonne inner derivations",
              "dim Inn = 2n with the zero-sum constraint; the mu_(n+1) unit "
              "is almost inner but not inner", _dom_n(), _check_d4),
        Claim("D5", "Dieudonne worked examples",
              "the n = 1, 2, 3 worked examples match (the n = 3 stated "
              "dimension is a flagged misprint)",
              _dom_n(cap=3), _check_d5, typo_flagged=True),
        Claim("P1", "almost inner = inner off the exceptional families",
              "AIDer = Inn for genus-1 members other than a = +-1 and the "
              "Dieudonne family", _dom_p1, _check_p1),
        Claim("P2", "strict almost inner inclusions",
              "AIDer strictly contains Inn with codimension 1 at a = +-1 "
              "and for the Dieudonne family", _dom_p2, _check_p2),
    )


def _claim_seed(master: int, claim_id: str, params: dict) -> int:
    blob = "%d|%s|%s" % (master, claim_id, sorted(params.items()))
    return zlib.crc32(blob.encode()) & 0x7FFFFFFF


def run_claim(claim: Claim, params: dict, master_seed: int = 0) -> ClaimResult:
    t0 = time.perf_counter()
    status, expected, actual = claim.check(params, _claim_seed(master_seed,
                                                               claim.id, params))
    if status == DISCREPANCY and not claim.typo_flagged:
        status = REFUTED
    return ClaimResult(claim.id, params, status, expected, actual,
                       time.perf_counter() - t0)


def run_all(nmax: int = 4, a_values=DEFAULT_A, seed: int = 0,
            only=None) -> Report:
    """Instantiate every claim over its domain clipped to nmax."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    a_values = tuple(a_values)
    results = []
    for claim in registry():
        if only and claim.id not in only:
            continue
        domain = claim.domain(nmax, a_values)
        if not domain:
            results.append(ClaimResult(claim.id, {}, SKIPPED, claim.statement,
                                       "no applicable parameters at nmax=%d"
                                       % nmax, 0.0))
            continue
        for params in domain:
            results.append(run_claim(claim, params, seed))
    digest = "nmax=%d;a=%s;seed=%d" % (
        nmax, ",".join(format_scalar(a) for a in a_values), seed)
    return Report(version=__version__,
                  input=hashlib.sha256(digest.encode()).hexdigest()[:16],
                  analyses=(),
                  claims=tuple(r.as_dict() for r in results))
