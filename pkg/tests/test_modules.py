import random

from hypothesis import given, settings
from hypothesis import strategies as st

from locus import (GF, Ideal, LocalRing, Matrix, Module, PolyRing, betti_ranks, mingens, minimal_presentation,
                   presentation, resolution, syz)
from locus.localring import frac_eq
from locus.modules import local_span_contains

from oracles import random_local_matrix

F = GF(32003)
R = PolyRing(F, ["x", "y", "z"])
x, y, z = R.gens()
RP = LocalRing(R, [x, y, z])
S4 = PolyRing(F, list("xyzw"))
X, Y, Z, W = S4.gens()
TWISTED = LocalRing(S4, [Y * W - Z ** 2, X * W - Y * Z, X * Z - Y ** 2])
EMBEDDED = Ideal(S4, [Z * (Y * W - Z ** 2) - W * (X * W - Y * Z), X * Z - Y ** 2])


def test_presentations():
    assert presentation(Module.free(RP, 1)).shape == (1, 0)
    f = RP.promote(Matrix(R, [[x, y ** 2]]))
    assert presentation(Module.coker(f)) == f


def unit_ratio(a, b):
    """u with a = u*b and u a unit of the local ring, or None."""
    RP = a.ring
    q = a.num.divexact(b.num)
    if q is None:
        return None
    u = RP.fraction(q * b.den, a.den)
    return u if RP.is_unit(u) and frac_eq(a, u * b) else None


def test_presentation_of_embedded_quotient():
    N = EMBEDDED.promote(TWISTED).quotient_module()
    P = presentation(minimal_presentation(N))
    assert P.shape == (1, 2)
    for target in [-(Z ** 3 - 2 * Y * Z * W + X * W ** 2), -(Y ** 2 - X * Z)]:
        t = TWISTED.promote(target)
        assert any(unit_ratio(e, t) is not None for e in P.row(0))


def test_mingens_examples():
    assert mingens(Module.free(RP, 1)) == Matrix.identity(RP, 1)
    I = Ideal(RP, [x, x + x ** 2])
    g = mingens(I.module())
    assert g.ncols == 1
    for target in [x, x + x ** 2]:
        assert local_span_contains(g, [RP.promote(target)])


def test_mingens_of_syzygy_column():
    S = PolyRing(F, list("abcdef"))
    a, b, c, d, e, f = S.gens()
    SM = LocalRing(S, S.gens())
    fm = SM.promote(Matrix(S, [[-a * b * c + d * e * f, 0, -b ** 3 + a * c * d],
                                [0, a * b * c - d * e * f, a * b ** 2 - c * d ** 2 - c],
                                [a * b ** 2 - c * d ** 2 - c, -b ** 3 + a * c * d, 0]]))
    G = syz(fm)
    assert G.ncols == 1
    expected = [SM.promote(t) for t in [b ** 3 - a * c * d, a * b ** 2 - c * d ** 2 - c, -a * b * c + d * e * f]]
    u = unit_ratio(G.column(0)[0], expected[0])
    assert u is not None
    assert all(frac_eq(g, u * t) for g, t in zip(G.column(0), expected))
    assert mingens(Module.image(G)).ncols == 1


def test_minimal_presentation_of_trivial_module():
    N = minimal_presentation(Module.coker(Matrix.identity(RP, 2)))
    assert N.ambient == 0 and N.num_gens == 0


def test_zero_module_canonical_form():
    N = minimal_presentation(Module.coker(Matrix.identity(RP, 1)))
    assert N.gens.shape == (0, 0) and N.rels.shape == (0, 0)
    assert N.is_zero_module()


def test_local_resolutions():
    S = PolyRing(F, list("abcd"))
    a, b, c, d = S.gens()
    I = Ideal(S, [b * c - a * d, c ** 3 - b * d ** 2, a * c ** 2 - b ** 2 * d, b ** 3 - a ** 2 * c])
    for prime, ranks in [([a, b, c], [1, 2, 1]), ([a, b, c, d], [1, 4, 4, 1])]:
        SP = LocalRing(S, prime)
        C, _ = resolution(I.promote(SP).quotient_module())
        assert betti_ranks(C) == ranks
    C, _ = resolution(Module.free(RP, 1))
    assert betti_ranks(C) == [1]


seeds = st.integers(0, 10 ** 9)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_local_syzygies_annihilate(seed):
    rng = random.Random(seed)
    M = random_local_matrix(RP, rng, rng.randint(1, 2), rng.randint(1, 3))
    assert (M @ syz(M)).is_zero()


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_mingens_minimal_and_generating(seed):
    rng = random.Random(seed)
    M = Module.image(random_local_matrix(RP, rng, 2, rng.randint(1, 3)))
    g = mingens(M)
    for j in range(M.num_gens):
        assert local_span_contains(g, M.gens.column(j))
    for j in range(g.ncols):
        rest = g.submatrix(cols=[k for k in range(g.ncols) if k != j])
        assert not local_span_contains(rest, g.column(j))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_minimal_presentation_matches_mingens(seed):
    rng = random.Random(seed)
    rows = rng.randint(1, 2)
    M = Module.coker(random_local_matrix(RP, rng, rows, rng.randint(1, 3)))
    N = minimal_presentation(M)
    assert N.ambient == mingens(M).ncols
    assert not any(RP.is_unit(e) for r in N.rels.entries for e in r if e)
