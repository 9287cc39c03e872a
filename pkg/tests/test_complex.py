import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locus import (GF, ChainComplex, LocalRing, Matrix, PolyRing, betti_ranks, prune_complex, prune_diff, prune_unit,
                   resolve_base, tensor_to_local)
from locus.complex import NotAUnitError, NotMinimalError

from property_checks import _check_pruning_map, random_change_of_basis, random_ideal

F = GF(32003)
R = PolyRing(F, ["x", "y", "z"])
x, y, z = R.gens()
RP = LocalRing(R, [x, y, z])
S = PolyRing(F, list("abcd"))
a, b, c, d = S.gens()
QUARTIC = [b * c - a * d, c ** 3 - b * d ** 2, a * c ** 2 - b ** 2 * d, b ** 3 - a ** 2 * c]
GOR = [x ** 3 + y ** 3, x ** 3 + z ** 3, x * y, x * z, y * z]


def local(entries):
    return RP.promote(Matrix(R, entries))


def test_single_unit_removed():
    C = ChainComplex(RP, [local([[z + 1]])])
    D = prune_unit(C, 1)
    assert D.ranks() == [0, 0]


def test_unit_pivot_by_hand():
    C = ChainComplex(RP, [local([[z + 1, 0], [0, x]])])
    D = prune_unit(C, 1, 0, 0)
    assert D.d(1) == local([[x]])


def test_schur_complement_by_hand():
    # [[u, p], [q, r]] -> r - q p / u
    C = ChainComplex(RP, [local([[z + 1, y], [x, x * y]])])
    D = prune_unit(C, 1)
    assert D.d(1).shape == (1, 1)
    e = D.d(1).entries[0][0]
    assert e == RP.fraction(x * y * (z + 1) - x * y, z + 1)


def test_non_unit_pivot_rejected():
    C = ChainComplex(RP, [local([[x]])])
    with pytest.raises(NotAUnitError):
        prune_unit(C, 1)


def test_prune_diff_identity_and_minimal():
    C = ChainComplex(RP, [Matrix.identity(RP, 3)])
    assert prune_diff(C, 1).ranks() == [0, 0]
    M = ChainComplex(RP, [local([[x, y]])])
    assert prune_diff(M, 1).d(1) == M.d(1)


def test_quartic_pruned():
    C = resolve_base(Matrix(S, [QUARTIC]))
    at_m, _ = prune_complex(tensor_to_local(C, LocalRing(S, [a, b, c, d])))
    assert betti_ranks(at_m) == [1, 4, 4, 1]
    at_p, pm = prune_complex(tensor_to_local(C, LocalRing(S, [a, b, c])))
    assert betti_ranks(at_p) == [1, 2, 1]
    assert pm.eliminated == [0, 2, 3, 1]


def test_gorenstein_tensor_keeps_ranks():
    C = tensor_to_local(resolve_base(Matrix(R, [GOR])), RP)
    assert C.ranks() == [1, 5, 5, 1]
    D, _ = prune_complex(C)
    assert betti_ranks(D) == [1, 5, 5, 1]


def test_empty_and_free():
    E = ChainComplex(RP, [], rank0=1)
    D, pm = prune_complex(E)
    assert D.ranks() == [1]
    assert betti_ranks(D) == [1]
    assert tensor_to_local(ChainComplex(R, [], rank0=0), RP).ranks() == [0]


def test_betti_needs_pruned_input():
    with pytest.raises(NotMinimalError):
        betti_ranks(ChainComplex(RP, [Matrix.identity(RP, 1)]))


def test_pruning_map_on_quartic():
    C = tensor_to_local(resolve_base(Matrix(S, [QUARTIC])), LocalRing(S, [a, b, c]))
    D, pm = prune_complex(C)
    _check_pruning_map(C, D, pm)


PRIMES = [[x, y, z], [x, y], [x - 1, y], [y, z]]
seeds = st.integers(0, 10 ** 9)


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from(range(len(PRIMES))))
def test_pruning_invariants(seed, which):
    rng = random.Random(seed)
    gens = random_ideal(R, rng, ngens=(2, 3), maxdeg=2, nterms=(1, 3))
    L = tensor_to_local(resolve_base(Matrix(R, [gens]), minimize=False), LocalRing(R, PRIMES[which]))
    D, pm = prune_complex(L)
    assert D.is_complex()
    assert not D.has_units()
    for before, after, gone in zip(L.ranks(), D.ranks(), pm.eliminated):
        assert before - after == gone
    _check_pruning_map(L, D, pm)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_betti_basis_independent(seed):
    rng = random.Random(seed)
    C = tensor_to_local(resolve_base(Matrix(S, [QUARTIC])), LocalRing(S, [a, b, c]))
    C2 = random_change_of_basis(C, rng, steps=4)
    assert C2.is_complex()
    D, _ = prune_complex(C2, track=False)
    assert betti_ranks(D) == [1, 2, 1]
