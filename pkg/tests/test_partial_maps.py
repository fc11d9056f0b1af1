import pytest

from ghcomplex.errors import DegreeMismatch, ParseError
from ghcomplex.partial_maps import (PartialMap, compose, constant_map,
                                    empty_map, format_partial_maps,
                                    identity_map, is_idempotent_map,
                                    parse_partial_maps, total_map)
from ghcomplex.repro import named_paper_generators, paper_fixture

FX = paper_fixture()


def test_identity_composes_trivially():
    assert compose(identity_map(8), FX.e) == FX.e
    assert compose(FX.e, identity_map(8)) == FX.e


def test_paper_generators_are_idempotent():
    assert compose(FX.e, FX.e) == FX.e
    assert compose(FX.k, FX.k) == FX.k
    assert is_idempotent_map(FX.e) and is_idempotent_map(FX.k)


def test_constant_map_composition():
    # (R1,L1) followed by (R1,L3): the first lands on L1, which lies in
    # block R1, so the composite is the constant L3 on all of R1.
    f_r1l1 = constant_map(8, {1, 2, 3, 4}, 1)
    f_r1l3 = constant_map(8, {1, 2, 3, 4}, 3)
    assert compose(f_r1l1, f_r1l3) == f_r1l3


def test_composition_domain_law():
    f = PartialMap(4, (2, None, 4, 1))
    g = PartialMap(4, (None, 3, 3, None))
    fg = compose(f, g)
    for x in range(1, 5):
        if f(x) is not None and g(f(x)) is not None:
            assert fg(x) == g(f(x))
        else:
            assert fg(x) is None


def test_empty_map_is_absorbing():
    empty = empty_map(8)
    assert compose(empty, empty) == empty
    assert compose(empty, FX.e) == empty
    assert compose(FX.k, empty) == empty


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity_map(3), identity_map(4))


def test_map_validation():
    with pytest.raises(ValueError):
        PartialMap(3, (1, 2, 4))
    with pytest.raises(ValueError):
        PartialMap(3, (1, 2))
    with pytest.raises(ValueError):
        PartialMap(2, (0, 1))


def test_domain_rank_helpers():
    pm = PartialMap(5, (3, 3, None, 1, None))
    assert pm.domain() == {1, 2, 4}
    assert pm.image_set() == {1, 3}
    assert pm.rank() == 2
    assert not pm.is_total() and not pm.is_empty()
    assert total_map((1, 2)).is_total()
    assert empty_map(2).is_empty()


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------

def test_parse_basic():
    text = """
    # two maps on three points
    degree 3
    a: 1 2 3
    b: . 3 .
    """
    maps = parse_partial_maps(text)
    assert maps == [("a", identity_map(3)), ("b", PartialMap(3, (None, 3, None)))]


def test_format_parse_round_trip():
    named = named_paper_generators()
    assert parse_partial_maps(format_partial_maps(named)) == named


def test_bundled_file_matches_builder():
    import importlib.resources as resources

    text = (resources.files("ghcomplex") / "data" / "paper_generators.maps") \
        .read_text(encoding="utf-8")
    assert parse_partial_maps(text) == named_paper_generators()


@pytest.mark.parametrize("bad", [
    "a: 1 2\n",                      # missing degree header
    "degree 2\na 1 2\n",             # missing colon
    "degree 2\na: 1\n",              # wrong entry count
    "degree 2\na: 1 3\n",            # out of range
    "degree 2\na: 1 x\n",            # bad token
    "degree 2\na: 1 2\na: 1 2\n",    # duplicate name
    "degree x\n",                    # bad degree
    "",                              # empty file
])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_partial_maps(bad)
