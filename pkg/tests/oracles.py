"""Independent oracles: none of these touch the Gröbner or pruning code under test."""

from __future__ import annotations

import itertools
import random
from math import comb
from typing import Dict, List, Sequence, Tuple

import numpy as np

from locus import Fraction, LocalRing, Matrix, PolyRing

P = 32003


def monomials_upto(nvars: int, deg: int) -> List[Tuple[int, ...]]:
    out = []
    for d in range(deg + 1):
        for c in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in c:
                e[i] += 1
            out.append(tuple(e))
    return out


def naive_mul(f: Dict, g: Dict, p: int = P) -> Dict:
    """Schoolbook product of two {exponent: coefficient} dicts mod p."""
    out: Dict = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


def _rank_mod_p(A: np.ndarray, p: int = P) -> int:
    A = A.copy() % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        r += 1
    return r


def linear_algebra_member(v: Dict, gens: Sequence[Dict], nvars: int, bound: int, p: int = P) -> bool:
    """Is v = sum c_i g_i with deg c_i <= bound? Decided by comparing ranks mod p."""
    cof = monomials_upto(nvars, bound)
    cols = []
    for g in gens:
        for m in cof:
            cols.append({tuple(a + b for a, b in zip(e, m)): c for e, c in g.items()})
    support = sorted({e for col in cols for e in col} | set(v))
    index = {e: i for i, e in enumerate(support)}
    A = np.zeros((len(support), len(cols) + 1), dtype=np.int64)
    for j, col in enumerate(cols):
        for e, c in col.items():
            A[index[e], j] = c % p
    base = _rank_mod_p(A[:, :-1], p)
    for e, c in v.items():
        A[index[e], -1] = c % p
    return _rank_mod_p(A, p) == base


def standard_monomial_count(gens: Sequence[Tuple[int, ...]], box: Sequence[int]) -> int:
    """Monomials inside ``box`` divisible by no generator exponent."""
    count = 0
    for e in itertools.product(*(range(b) for b in box)):
        if not any(all(a >= g for a, g in zip(e, ge)) for ge in gens):
            count += 1
    return count


def hilbert_closed_form(n: int, r: int) -> int:
    """Number of degree-n monomials in r variables."""
    return comb(n + r - 1, r - 1)


def random_poly(R: PolyRing, rng: random.Random, maxdeg: int, nterms: int, const: bool = True):
    mons = [m for m in monomials_upto(R.nvars, maxdeg) if const or any(m)]
    terms = [(rng.choice(mons), rng.randrange(1, P)) for _ in range(nterms)]
    return R.from_terms(terms)


def random_unit(RP: LocalRing, rng: random.Random):
    """A denominator outside the prime: a nonzero constant plus an element of the prime."""
    R = RP.base
    f = R.constant(rng.randrange(1, P))
    for g in RP.prime:
        f = f + random_poly(R, rng, 1, 2) * g
    assert not RP.in_prime(f)
    return f


def random_fraction(RP: LocalRing, rng: random.Random, maxdeg: int = 2):
    num = random_poly(RP.base, rng, maxdeg, rng.randrange(0, 3))
    den = random_unit(RP, rng) if rng.random() < 0.6 else RP.base.one()
    return Fraction(RP, num, den) if den != RP.base.one() else RP.promote(num)


def random_local_matrix(RP: LocalRing, rng: random.Random, nrows: int, ncols: int) -> Matrix:
    return Matrix(RP, [[random_fraction(RP, rng) for _ in range(ncols)] for _ in range(nrows)], nrows, ncols)
