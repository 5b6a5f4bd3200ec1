"""Zigzag engine: step orbits, atlases, knottedness, Gauss codes."""

import random

import pytest
from hypothesis import given, strategies as st

import trizig as tz
from trizig.core import Dart
from trizig.errors import FaceNotFound, InvalidPosition, NotZKnotted
from trizig.zigzag import Position, least_rotation

PAPER_BP3_CYCLE = ("a", "1", "2", "b", "3", "1", "a", "2", "3",
                   "b", "1", "2", "a", "3", "1", "b", "2", "3")


def _cyclic_equal(seq, other):
    seq, other = list(seq), list(other)
    if len(seq) != len(other):
        return False
    return any(other == seq[i:] + seq[:i] for i in range(len(seq)))


def test_step_on_tetrahedron():
    tetra = tz.platonic("tetrahedron")
    got = tz.step(tetra, Position(Dart("1", "2"), ("1", "2", "3")))
    assert got == Position(Dart("2", "4"), ("1", "2", "4"))


def test_step_closes_after_18_on_bp3():
    bp3 = tz.bipyramid(3)
    start = Position(Dart("1", "2"), ("1", "2", "a"))
    position = start
    for i in range(18):
        position = tz.step(bp3, position)
        if i < 17:
            assert position != start
    assert position == start


def test_step_is_a_bijection(named_corpus):
    for tri in (named_corpus["bp3"], named_corpus["tetrahedron"],
                named_corpus["projective_plane"]):
        positions = [Position(Dart(u, v), face)
                     for (u, v) in tri.edges
                     for face in tri.edge_faces[(u, v)]] \
                  + [Position(Dart(v, u), face)
                     for (u, v) in tri.edges
                     for face in tri.edge_faces[(u, v)]]
        assert len(positions) == 4 * len(tri.edges)
        images = {tz.step(tri, p) for p in positions}
        assert images == set(positions)


def test_step_rejects_invalid_positions():
    tetra = tz.platonic("tetrahedron")
    with pytest.raises(InvalidPosition):
        tz.step(tetra, Position(Dart("1", "2"), ("1", "3", "4")))
    with pytest.raises(InvalidPosition):
        tz.step(tetra, Position(Dart("1", "2"), ("1", "2", "9")))


def test_trace_rejects_invalid_positions():
    bp3 = tz.bipyramid(3)
    with pytest.raises(InvalidPosition):
        tz.trace(bp3, Position(Dart("1", "3"), ("1", "2", "a")))
    with pytest.raises(InvalidPosition):
        tz.trace(bp3, Position(Dart("1", "1"), ("1", "2", "a")))


def test_reverse_position_golden():
    face = ("t", "u", "v")
    assert tz.reverse_position(Position(Dart("u", "v"), face)) == \
        Position(Dart("u", "t"), face)


def test_reverse_position_is_an_involution():
    face = ("1", "2", "a")
    for dart in tz.omega(face):
        position = Position(dart, face)
        assert tz.reverse_position(tz.reverse_position(position)) == position


def test_reverse_after_step_is_an_involution_exhaustively():
    # Exhaustive on every position of the tetrahedron and BP_3.
    for tri in (tz.platonic("tetrahedron"), tz.bipyramid(3)):
        for (u, v) in tri.edges:
            for dart in (Dart(u, v), Dart(v, u)):
                for face in tri.edge_faces[(u, v)]:
                    position = Position(dart, face)
                    once = tz.reverse_position(tz.step(tri, position))
                    assert tz.reverse_position(tz.step(tri, once)) == position


def test_trace_of_reverse_position_is_the_reversed_zigzag(named_corpus):
    for name in ("bp5", "bp6", "projective_plane"):
        tri = named_corpus[name]
        for face in tri.faces[:3]:
            for dart in tz.omega(face):
                position = Position(dart, face)
                forward = tz.trace(tri, position)
                backward = tz.trace(tri, tz.reverse_position(position))
                assert backward == forward.reverse()


def test_trace_bp3_matches_the_worked_zigzag():
    bp3 = tz.bipyramid(3)
    zigzag = tz.trace(bp3, Position(Dart("1", "2"), ("1", "2", "a")))
    assert zigzag.length == 18
    assert _cyclic_equal(zigzag.vertices, PAPER_BP3_CYCLE) or \
        _cyclic_equal(tuple(reversed(zigzag.vertices)), PAPER_BP3_CYCLE)
    # same orbit -> same canonical zigzag
    assert tz.trace(bp3, tz.step(bp3, Position(Dart("1", "2"), ("1", "2", "a")))) == zigzag


def test_trace_tetrahedron_simple_quadrilateral():
    tetra = tz.platonic("tetrahedron")
    zigzag = tz.trace(tetra, Position(Dart("2", "4"), ("1", "2", "4")))
    assert zigzag.length == 4
    assert len(set(zigzag.vertices)) == 4


def test_atlas_tetrahedron():
    atlas = tz.all_zigzags(tz.platonic("tetrahedron"))
    assert atlas.count == 6
    assert atlas.pair_count == 3
    assert all(z.length == 4 and z.is_simple for z in atlas)


def test_atlas_bp3():
    atlas = tz.all_zigzags(tz.bipyramid(3))
    assert atlas.count == 2
    assert [z.length for z in atlas] == [18, 18]


def test_atlas_octahedron():
    # 8 directed zigzags of length 6; 8 * 6 = 48 = 4 * 12 positions.
    octa = tz.platonic("octahedron")
    atlas = tz.all_zigzags(octa)
    assert atlas.count == 8
    assert all(z.length == 6 for z in atlas)
    assert sum(z.length for z in atlas) == 4 * len(octa.edges)


def test_atlas_partitions_positions(full_corpus):
    for tri in full_corpus[:40]:
        atlas = tz.all_zigzags(tri)
        assert sum(z.length for z in atlas) == 4 * len(tri.edges)


def test_atlas_pairing_is_fixed_point_free_involution(full_corpus):
    for tri in full_corpus[:40]:
        atlas = tz.all_zigzags(tri)
        for zigzag in atlas:
            partner = atlas.reverse_of(zigzag)
            assert partner != zigzag
            assert partner == zigzag.reverse()
            assert atlas.reverse_of(partner) == zigzag
        assert len(atlas.pairs()) == atlas.pair_count


def test_no_zigzag_equals_its_reverse(full_corpus):
    for tri in full_corpus[:60]:
        for zigzag in tz.all_zigzags(tri):
            assert zigzag.reverse() != zigzag


def test_is_z_knotted():
    assert tz.is_z_knotted(tz.bipyramid(3))
    assert not tz.is_z_knotted(tz.bipyramid(8))
    assert not tz.is_z_knotted(tz.platonic("tetrahedron"))


def test_zigzags_of_face_counts():
    face = ("1", "2", "a")
    assert len(tz.zigzags_of_face(tz.bipyramid(8), face)) == 6
    assert len(tz.zigzags_of_face(tz.bipyramid(6), face)) == 4
    for f in tz.bipyramid(3).faces:
        assert len(tz.zigzags_of_face(tz.bipyramid(3), f)) == 2
    with pytest.raises(FaceNotFound):
        tz.zigzags_of_face(tz.bipyramid(3), ("1", "2", "9"))


def test_zigzags_of_face_matches_edge_membership(full_corpus):
    # A zigzag passes the face's seeds iff it carries an edge of the face.
    for tri in full_corpus[:20]:
        atlas = tz.all_zigzags(tri)
        for face in tri.faces:
            seeded = tz.zigzags_of_face(tri, face)
            face_edges = set(tz.face_edges(face))
            touching = {z for z in atlas
                        if face_edges & set(z.edge_counts())}
            assert seeded == touching
            assert len(seeded) in (2, 4, 6)
            assert {z.reverse() for z in seeded} == seeded


def test_is_locally_z_knotted():
    face = ("1", "2", "a")
    assert tz.is_locally_z_knotted(tz.bipyramid(3), face)
    assert not tz.is_locally_z_knotted(tz.bipyramid(8), face)
    assert not tz.is_locally_z_knotted(tz.bipyramid(6), face)


def test_is_essential():
    tetra = tz.platonic("tetrahedron")
    assert all(tz.is_essential(tetra, face) for face in tetra.faces)
    bp3 = tz.bipyramid(3)
    assert all(tz.is_essential(bp3, face) for face in bp3.faces)
    octa = tz.platonic("octahedron")
    assert not all(tz.is_essential(octa, face) for face in octa.faces)


def test_is_essential_matches_atlas_route(full_corpus):
    for tri in full_corpus[:15]:
        atlas = tz.all_zigzags(tri)
        for face in tri.faces:
            edges = set(tz.face_edges(face))
            naive = all(edges & set(z.edge_counts()) for z in atlas)
            assert tz.is_essential(tri, face) == naive


def test_z_knotted_implies_essential_and_locally_knotted(knotted_corpus):
    for tri in knotted_corpus[:30]:
        for face in tri.faces:
            assert tz.is_essential(tri, face)
            assert tz.is_locally_z_knotted(tri, face)


def test_is_simple():
    assert all(z.is_simple for z in tz.all_zigzags(tz.platonic("tetrahedron")))
    assert all(z.is_simple for z in tz.all_zigzags(tz.platonic("icosahedron")))
    bp3_zigzag = next(iter(tz.all_zigzags(tz.bipyramid(3))))
    assert not tz.is_simple(bp3_zigzag)


def test_gauss_code_bp3():
    word = tz.gauss_code(tz.bipyramid(3))
    assert len(word) == 18
    assert len(set(word)) == 9
    assert all(sum(1 for w in word if w == symbol) == 2 for symbol in set(word))


def test_gauss_code_bp5_length():
    word = tz.gauss_code(tz.bipyramid(5))
    assert len(word) == 30
    assert len(set(word)) == 15


def test_gauss_code_requires_knotted():
    with pytest.raises(NotZKnotted):
        tz.gauss_code(tz.platonic("octahedron"))


def test_lemma1_equivalence(full_corpus):
    # single zigzag pair <=> some zigzag passes through every edge twice
    for tri in full_corpus[:80]:
        atlas = tz.all_zigzags(tri)
        single_pair = atlas.count == 2
        full_double_cover = any(
            len(z.edge_counts()) == len(tri.edges)
            and set(z.edge_counts().values()) == {2}
            for z in atlas)
        assert single_pair == full_double_cover


def test_least_rotation_small_cases():
    assert least_rotation((2, 1, 3)) == (1, 3, 2)
    assert least_rotation("baa") == ("a", "a", "b")
    assert least_rotation((5,)) == (5,)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=10))
def test_least_rotation_matches_bruteforce(values):
    rotations = [tuple(values[i:] + values[:i]) for i in range(len(values))]
    assert least_rotation(values) == min(rotations)


def test_zigzag_canonical_form_is_rotation_invariant():
    rng = random.Random(7)
    bp5 = tz.bipyramid(5)
    atlas = tz.all_zigzags(bp5)
    for zigzag in atlas:
        darts = list(zigzag.darts)
        k = rng.randrange(len(darts))
        assert tz.Zigzag(darts[k:] + darts[:k]) == zigzag
