import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locus import (GF, QQ, Ideal, LengthCapExceeded, LocalRing, Matrix, Module, PolyRing, hilbert_samuel_function, length_of,
                   multiplicity_at)
from locus.invariants import power_times

from oracles import hilbert_closed_form, standard_monomial_count

F = GF(32003)


def _origin(names, field=F):
    R = PolyRing(field, list(names))
    return R, LocalRing(R, R.gens())


def test_twisted_cubic_length_and_hsf():
    S = PolyRing(F, list("xyzw"))
    x, y, z, w = S.gens()
    SP = LocalRing(S, [y * w - z ** 2, x * w - y * z, x * z - y ** 2])
    N = Ideal(S, [z * (y * w - z ** 2) - w * (x * w - y * z), x * z - y ** 2]).promote(SP).quotient_module()
    assert length_of(N) == 2
    assert [hilbert_samuel_function(N, n) for n in range(4)] == [1, 1, 0, 0]


def test_zero_module_has_length_zero():
    _, RP = _origin("xy")
    assert length_of(Module.coker(Matrix.identity(RP, 1))) == 0


def test_plane_hsf_values():
    R, RP = _origin("xy")
    x, y = R.gens()
    N = Module.free(RP, 1)
    assert [hilbert_samuel_function(N, n) for n in range(6)] == [1, 2, 3, 4, 5, 6]
    q = Ideal(R, [x ** 2, y ** 3])
    assert [hilbert_samuel_function(N, n, q=q) for n in range(6)] == [6, 12, 18, 24, 30, 36]


def test_infinite_length_guard():
    _, RP = _origin("xy")
    with pytest.raises(LengthCapExceeded):
        length_of(Module.free(RP, 1), cap=100)
    with pytest.raises(LengthCapExceeded) as info:
        length_of(Module.free(RP, 1), cap=5)
    assert info.value.cap == 5


def test_unit_parameter_rejected():
    R, RP = _origin("xy")
    with pytest.raises(ValueError):
        hilbert_samuel_function(Module.free(RP, 1), 1, q=[R.one() + R.gens()[0]])


@pytest.mark.parametrize("r", [2, 3])
def test_hsf_closed_form(r):
    _, RP = _origin("xyz"[:r])
    N = Module.free(RP, 1)
    assert [hilbert_samuel_function(N, n) for n in range(7)] == [hilbert_closed_form(n, r) for n in range(7)]


def test_intersection_multiplicities():
    R = PolyRing(F, ["x", "y"])
    x, y = R.gens()
    C, D, E = y - x ** 2, y - x, y
    assert multiplicity_at(Ideal(R, [C, D]), [x - 1, y - 1]) == 1
    assert multiplicity_at(Ideal(R, [C, E]), [x - 1, y - 1]) == 0
    assert multiplicity_at(Ideal(R, [C, D]), [x, y]) == 1
    assert multiplicity_at(Ideal(R, [C, E]), [x, y]) == 2
    C3 = y - x ** 3
    assert multiplicity_at(Ideal(R, [C3, y - x ** 2]), [x, y]) == 2
    assert multiplicity_at(Ideal(R, [C3, E]), [x, y]) == 3
    assert multiplicity_at(Ideal(R, [C3, y - x ** 2]), [x - 1, y - 1]) == 1
    assert multiplicity_at(Ideal(R, [C3, E]), [x - 1, y - 1]) == 0


def test_length_is_sum_of_hsf():
    R, RP = _origin("xy")
    x, y = R.gens()
    M = Ideal(R, [x ** 3, y ** 2, x * y]).promote(RP).quotient_module()
    total = length_of(M)
    parts = []
    n = 0
    while True:
        h = hilbert_samuel_function(M, n)
        if h == 0:
            break
        parts.append(h)
        n += 1
    assert sum(parts) == total == standard_monomial_count([(3, 0), (0, 2), (1, 1)], (3, 2))


def test_maximal_ideal_shortcut_agrees_with_quotient_length():
    # H_m(n) via minimal generators of m^n M equals the length of m^n M / m^{n+1} M
    R, RP = _origin("xy")
    x, y = R.gens()
    M = Ideal(R, [x ** 4, y ** 3]).promote(RP).quotient_module()
    m = RP.maximal_ideal_gens()
    for n in range(5):
        Qn = power_times(m, M, n)
        Qn1 = power_times(m, M, n + 1)
        quotient = Module(RP, Qn.gens, Qn.rels.hstack(Qn1.gens))
        assert hilbert_samuel_function(M, n) == length_of(quotient)


seeds = st.integers(0, 10 ** 9)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_length_matches_standard_monomials(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 3)
    R, RP = _origin("xyz"[:nv])
    box = [rng.randint(1, 3) for _ in range(nv)]
    exps = [tuple(box[i] if j == i else 0 for j in range(nv)) for i in range(nv)]
    exps += [tuple(rng.randint(0, b) for b in box) for _ in range(rng.randint(0, 2))]
    exps = [e for e in exps if any(e)]
    M = Ideal(R, [R.monomial(e) for e in exps]).promote(RP).quotient_module()
    assert length_of(M) == standard_monomial_count(exps, box)


def test_rational_example_small():
    # smaller cousin of the QQ example: length of QQ[x,y]_(x,y) / (x^2+y^3, x^3+y^2) is 4
    R, RP = _origin("xy", QQ)
    x, y = R.gens()
    M = Ideal(R, [x ** 2 + y ** 3, x ** 3 + y ** 2]).promote(RP).quotient_module()
    assert length_of(M) == 4
    assert [hilbert_samuel_function(M, n) for n in range(4)] == [1, 2, 1, 0]
