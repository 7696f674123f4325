import pytest
from hypothesis import given, strategies as st

from conftest import get_root_system
from stablepieces.rootsys import (
    GuardExceededError,
    RootSystemError,
    Weight,
    build_root_system,
    make_automorphism,
    orbit_fundamental_weights,
    parse_automorphism_spec,
    weight_predicates,
)

# all types small enough for the default group-size guard
CONSTRUCTIBLE = (
    ["A1", "A2", "A3", "A4", "A5", "A6"]
    + ["B2", "B3", "B4", "B5"]
    + ["C3", "C4", "C5"]
    + ["D4", "D5", "D6"]
    + ["E6", "F4", "G2"]
)


def classical_root_count(type_spec):
    letter, n = type_spec[0], int(type_spec[1:])
    if letter == "E":
        return {6: 72, 7: 126, 8: 240}[n]
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "F": 48,
        "G": 12,
    }[letter]


@pytest.mark.parametrize("type_spec", CONSTRUCTIBLE)
def test_root_counts_match_classical_values(type_spec):
    rs = get_root_system(type_spec)
    assert len(rs.roots) == classical_root_count(type_spec)
    assert len(rs.roots) == 2 * rs.positive_count


@pytest.mark.parametrize("type_spec", CONSTRUCTIBLE)
def test_table_structure(type_spec):
    rs = get_root_system(type_spec)
    # simple roots head the table, in index order
    for i in rs.index_set:
        assert rs.roots[i - 1] == tuple(1 if j == i - 1 else 0 for j in range(rs.rank))
    # closed under negation, mirrored halves
    for r, beta in enumerate(rs.roots):
        assert rs.roots[rs.negate_id(r)] == tuple(-b for b in beta)
    positives = rs.roots[: rs.positive_count]
    assert all(all(b >= 0 for b in beta) for beta in positives)
    assert all(any(b < 0 for b in beta) for beta in rs.roots[rs.positive_count:])


@pytest.mark.parametrize("type_spec", ["A1", "A2", "B2", "G2", "A3", "D4", "F4"])
def test_reflect_is_an_involution(type_spec):
    rs = get_root_system(type_spec)
    for i in rs.index_set:
        for beta in rs.roots:
            image = rs.reflect(i, beta)
            assert image in rs._index
            assert rs.reflect(i, image) == beta


def test_reflect_examples():
    rs = get_root_system("A2")
    assert rs.reflect(1, (1, 0)) == (-1, 0)
    assert rs.reflect(1, (0, 1)) == (1, 1)
    assert rs.reflect(2, (1, 1)) == (1, 0)


def test_reflect_rejects_non_roots():
    rs = get_root_system("A2")
    with pytest.raises(RootSystemError):
        rs.reflect(1, (2, 0))


def test_small_type_examples():
    a1 = get_root_system("A1")
    assert len(a1.roots) == 2 and a1.positive_count == 1
    a2 = get_root_system("A2")
    assert len(a2.roots) == 6 and a2.positive_count == 3
    assert set(a2.roots[:3]) == {(1, 0), (0, 1), (1, 1)}
    g2 = get_root_system("G2")
    assert len(g2.roots) == 12 and g2.positive_count == 6


@pytest.mark.parametrize(
    "bad", ["H3", "X1", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "A0", "", "3A"]
)
def test_bad_type_specs(bad):
    with pytest.raises(RootSystemError):
        build_root_system(bad)


def test_guard():
    with pytest.raises(GuardExceededError):
        build_root_system("E7")  # |W| = 2903040 over the default guard
    assert build_root_system("E7", guard=3_000_000).rank == 7
    with pytest.raises(GuardExceededError):
        build_root_system("A2", guard=5)


def test_automorphisms():
    a2 = get_root_system("A2")
    swap = make_automorphism(a2, (2, 1))
    assert swap.order == 2
    ident = make_automorphism(a2, (1, 2))
    assert ident.order == 1 and ident.is_identity

    b2 = get_root_system("B2")
    with pytest.raises(RootSystemError):
        make_automorphism(b2, (2, 1))

    d4 = get_root_system("D4")
    rotation = parse_automorphism_spec(d4, "1:3,2:2,3:4,4:1")
    assert rotation.order == 3
    assert sorted(tuple(sorted(o)) for o in rotation.orbits()) == [(1, 3, 4), (2,)]

    with pytest.raises(RootSystemError):
        parse_automorphism_spec(a2, "1:1")
    with pytest.raises(RootSystemError):
        parse_automorphism_spec(a2, "1:1,1:2")
    with pytest.raises(RootSystemError):
        parse_automorphism_spec(a2, "nonsense")


@pytest.mark.parametrize(
    "type_spec,auto_spec",
    [("A2", "1:2,2:1"), ("A3", "1:3,2:2,3:1"), ("D4", "1:3,2:2,3:4,4:1")],
)
def test_automorphism_permutes_roots(type_spec, auto_spec):
    rs = get_root_system(type_spec)
    sigma = parse_automorphism_spec(rs, auto_spec)
    for r, beta in enumerate(rs.roots):
        image = sigma.root_image(beta)
        assert image in rs._index
        assert rs.is_positive_id(rs.root_id(image)) == rs.is_positive_id(r)


def test_weight_predicates():
    a2 = get_root_system("A2")
    swap = make_automorphism(a2, (2, 1))
    ident = make_automorphism(a2, (1, 2))

    p = weight_predicates(a2, ident, Weight((1, 1)))
    assert p.dominant and p.regular and p.sigma_stable and p.support == {1, 2}
    assert weight_predicates(a2, swap, Weight((1, 1))).sigma_stable

    p = weight_predicates(a2, swap, Weight((1, 0)))
    assert p.dominant and not p.regular and not p.sigma_stable and p.support == {1}

    assert not weight_predicates(a2, ident, Weight((-1, 2))).dominant

    with pytest.raises(RootSystemError):
        weight_predicates(a2, ident, Weight((1,)))


def test_orbit_fundamental_weights():
    a2 = get_root_system("A2")
    swap = make_automorphism(a2, (2, 1))
    ident = make_automorphism(a2, (1, 2))
    assert [w.coeffs for w in orbit_fundamental_weights(a2, ident)] == [(1, 0), (0, 1)]
    assert [w.coeffs for w in orbit_fundamental_weights(a2, swap)] == [(1, 1)]


@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_reflection_preserves_root_table(type_spec, data):
    rs = get_root_system(type_spec)
    i = data.draw(st.integers(1, rs.rank))
    beta = data.draw(st.sampled_from(rs.roots))
    image = rs.reflect(i, beta)
    assert image in rs._index
    assert rs.reflect(i, image) == beta
