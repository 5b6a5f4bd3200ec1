"""The zigzag engine: step permutation, orbits, knottedness, Gauss codes.

A zigzag alternates left and right: consecutive oriented edges share a face
and a head-to-tail vertex, and the shared face changes at every step.  The
walk state is a position (dart, face) standing for the consecutive pair
(rotation^-1(dart), dart) inside that face, so a triangulation with E edges
has exactly 4E positions.  The step map is a bijection on positions and the
zigzags are its orbits; everything else here (knottedness, per-face zigzag
sets, essential faces, Gauss codes) is read off the orbit partition.
"""

import collections
import typing

from .core import (Dart, Edge, Face, Triangulation, face_rotation_inverse,
                   make_face, omega, third_vertex)
from .errors import FaceNotFound, InvalidPosition, NotZKnotted


class Position(typing.NamedTuple):
    """A walk state: the dart just traversed and the face it was read in."""

    dart: Dart
    face: Face


def _check_position(tri: Triangulation, position: Position) -> None:
    dart, face = position
    if not tri.has_face(face):
        raise InvalidPosition(f"face {face!r} not in triangulation")
    if dart.tail == dart.head:
        raise InvalidPosition(f"degenerate dart {dart!r}")
    if dart.tail not in face or dart.head not in face:
        raise InvalidPosition(f"dart {dart!r} is not on face {face!r}")


def step(tri: Triangulation, position: Position) -> Position:
    """Advance one zigzag step.

    For position ((u, v), F) the walk continues in the other face F'
    containing {u, v}: the next dart runs from v to the third vertex of F',
    and F' becomes the face of the new position.  A bijection on positions.
    """
    _check_position(tri, position)
    (u, v), face = position
    first, second = tri.edge_faces[position.dart.edge]
    next_face = second if first == face else first
    return Position(Dart(v, third_vertex(next_face, u, v)), next_face)


def reverse_position(position: Position) -> Position:
    """The state of the reversed zigzag at the same spot.

    Maps (dart, F) to (-rotation^-1(dart), F); an involution carrying every
    orbit onto the orbit of its reversed zigzag.
    """
    dart, face = position
    if dart.tail not in face or dart.head not in face:
        raise InvalidPosition(f"dart {dart!r} is not on face {face!r}")
    return Position(-face_rotation_inverse(face, dart), face)


class _Tables:
    """Orbit decomposition of the step permutation, cached per triangulation.

    positions are sorted, so orbit discovery order (and hence every output
    derived from it) is deterministic.
    """

    __slots__ = ("positions", "index", "step", "orbits", "orbit_of", "slot_of")

    def __init__(self, tri: Triangulation):
        positions = []
        for edge, (face1, face2) in tri.edge_faces.items():
            u, v = edge
            for dart in (Dart(u, v), Dart(v, u)):
                positions.append(Position(dart, face1))
                positions.append(Position(dart, face2))
        positions.sort()
        index = {position: i for i, position in enumerate(positions)}

        step_table = []
        for (u, v), face in positions:
            first, second = tri.edge_faces[(u, v) if u < v else (v, u)]
            next_face = second if first == face else first
            nxt = Position(Dart(v, third_vertex(next_face, u, v)), next_face)
            step_table.append(index[nxt])

        count = len(positions)
        orbit_of = [-1] * count
        slot_of = [0] * count
        orbits: typing.List[typing.Tuple[int, ...]] = []
        for start in range(count):
            if orbit_of[start] >= 0:
                continue
            orbit_id = len(orbits)
            orbit = []
            i = start
            while orbit_of[i] < 0:
                orbit_of[i] = orbit_id
                slot_of[i] = len(orbit)
                orbit.append(i)
                i = step_table[i]
            if i != start:
                raise AssertionError("step map failed to be a permutation")
            orbits.append(tuple(orbit))

        self.positions = positions
        self.index = index
        self.step = step_table
        self.orbits = orbits
        self.orbit_of = orbit_of
        self.slot_of = slot_of


def _tables(tri: Triangulation) -> _Tables:
    tables = tri._cache.get("zigzag_tables")
    if tables is None:
        tables = _Tables(tri)
        tri._cache["zigzag_tables"] = tables
    return tables


def _face_hits(tri: Triangulation) -> typing.Dict[Face, list]:
    """For each face, the orbit locations of every dart on one of its edges.

    Entries are (orbit id, slot in orbit, dart), sorted; each face receives
    exactly 12 entries (3 edges x 2 directions x 2 reading faces).
    """
    hits = tri._cache.get("face_hits")
    if hits is None:
        tables = _tables(tri)
        hits = {face: [] for face in tri.faces}
        for i, (dart, _face) in enumerate(tables.positions):
            entry = (tables.orbit_of[i], tables.slot_of[i], dart)
            for owner in tri.edge_faces[dart.edge]:
                hits[owner].append(entry)
        for entries in hits.values():
            entries.sort()
        tri._cache["face_hits"] = hits
    return hits


def least_rotation(sequence):
    """The lexicographically least rotation of a sequence (Booth's algorithm)."""
    seq = list(sequence)
    n = len(seq)
    doubled = seq + seq
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        item = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and item != doubled[k + i + 1]:
            if item < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if item != doubled[k + i + 1]:
            if item < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return tuple(doubled[k:k + n])


class Zigzag:
    """A directed zigzag as a canonical cyclic sequence of darts.

    The stored tuple is the lexicographically least rotation, so equality and
    hashing are plain tuple comparisons.  A zigzag is never equal to its own
    reverse.
    """

    __slots__ = ("darts",)

    def __init__(self, darts: typing.Iterable[Dart]):
        self.darts: typing.Tuple[Dart, ...] = least_rotation(darts)

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> typing.Tuple[str, ...]:
        """The vertex cycle: the tail of each dart in order."""
        return tuple(dart.tail for dart in self.darts)

    @property
    def is_simple(self) -> bool:
        vertices = self.vertices
        return len(set(vertices)) == len(vertices)

    def reverse(self) -> "Zigzag":
        return Zigzag(-dart for dart in reversed(self.darts))

    def edge_counts(self) -> typing.Dict[Edge, int]:
        """How many times the zigzag traverses each undirected edge."""
        return dict(collections.Counter(dart.edge for dart in self.darts))

    def __eq__(self, other):
        return isinstance(other, Zigzag) and self.darts == other.darts

    def __lt__(self, other):
        return self.darts < other.darts

    def __hash__(self):
        return hash(self.darts)

    def __repr__(self):
        return f"Zigzag({','.join(map(repr, self.darts))})"


class ZigzagAtlas:
    """All directed zigzags of a triangulation plus the reversal pairing.

    The zigzag tuple is in deterministic discovery order; ``pairing`` is a
    fixed-point-free involution matching each zigzag with its reverse.  The
    orbit lengths always sum to 4E.
    """

    __slots__ = ("zigzags", "pairing")

    def __init__(self, zigzags: typing.Tuple[Zigzag, ...],
                 pairing: typing.Dict[Zigzag, Zigzag]):
        self.zigzags = zigzags
        self.pairing = pairing

    @property
    def count(self) -> int:
        return len(self.zigzags)

    @property
    def pair_count(self) -> int:
        return len(self.zigzags) // 2

    def reverse_of(self, zigzag: Zigzag) -> Zigzag:
        return self.pairing[zigzag]

    def pairs(self) -> typing.Tuple[typing.Tuple[Zigzag, Zigzag], ...]:
        """Each reversal pair once, keyed by its smaller member, sorted."""
        seen = set()
        out = []
        for zigzag in sorted(self.zigzags):
            if zigzag not in seen:
                partner = self.pairing[zigzag]
                seen.add(zigzag)
                seen.add(partner)
                out.append((zigzag, partner))
        return tuple(out)

    def __iter__(self):
        return iter(self.zigzags)

    def __len__(self):
        return len(self.zigzags)


def _atlas(tri: Triangulation) -> ZigzagAtlas:
    atlas = tri._cache.get("atlas")
    if atlas is None:
        tables = _tables(tri)
        zigzags = tuple(
            Zigzag(tables.positions[i].dart for i in orbit)
            for orbit in tables.orbits
        )
        by_value = {zigzag: zigzag for zigzag in zigzags}
        pairing = {}
        for zigzag in zigzags:
            partner = by_value.get(zigzag.reverse())
            if partner is None or partner == zigzag:
                raise AssertionError("reversal pairing is not a fixed-point-free "
                                     "involution on the orbit set")
            pairing[zigzag] = partner
        atlas = ZigzagAtlas(zigzags, pairing)
        tri._cache["atlas"] = atlas
    return atlas


def trace(tri: Triangulation, position: Position) -> Zigzag:
    """The zigzag through a position: iterate step until first return."""
    _check_position(tri, position)
    tables = _tables(tri)
    start = tables.index[position]
    orbit = tables.orbits[tables.orbit_of[start]]
    slot = tables.slot_of[start]
    rotated = orbit[slot:] + orbit[:slot]
    return Zigzag(tables.positions[i].dart for i in rotated)


def all_zigzags(tri: Triangulation) -> ZigzagAtlas:
    """The orbit partition of all 4E positions with the reversal pairing."""
    return _atlas(tri)


def is_z_knotted(tri: Triangulation) -> bool:
    """Whether there is a single zigzag up to reversal.

    When true, each of the two directed zigzags traverses every edge exactly
    twice; that consequence is re-checked here rather than trusted.
    """
    tables = _tables(tri)
    if len(tables.orbits) != 2:
        return False
    for orbit in tables.orbits:
        counts = collections.Counter(
            tables.positions[i].dart.edge for i in orbit)
        if len(counts) != len(tri.edges) or set(counts.values()) != {2}:
            raise AssertionError(
                "single zigzag pair that does not traverse every edge twice")
    return True


def _face_orbit_ids(tri: Triangulation, face: Face) -> typing.FrozenSet[int]:
    """Orbits of the six seed positions (dart of face, face)."""
    tables = _tables(tri)
    return frozenset(tables.orbit_of[tables.index[Position(dart, face)]]
                     for dart in omega(face))


def zigzags_of_face(tri: Triangulation, face: Face) -> typing.FrozenSet[Zigzag]:
    """The directed zigzags through the edges of a face.

    These are the orbits of the six positions seated at the face; the result
    always has even size 2, 4 or 6 and is closed under reversal.
    """
    face = make_face(*face)
    if not tri.has_face(face):
        raise FaceNotFound(f"face {face!r} not in triangulation")
    atlas = _atlas(tri)
    return frozenset(atlas.zigzags[i] for i in _face_orbit_ids(tri, face))


def is_locally_z_knotted(tri: Triangulation, face: Face) -> bool:
    """Whether exactly one zigzag pair meets the edges of the face."""
    face = make_face(*face)
    if not tri.has_face(face):
        raise FaceNotFound(f"face {face!r} not in triangulation")
    return len(_face_orbit_ids(tri, face)) == 2


def is_essential(tri: Triangulation, face: Face) -> bool:
    """Whether every zigzag of the triangulation meets an edge of the face."""
    face = make_face(*face)
    if not tri.has_face(face):
        raise FaceNotFound(f"face {face!r} not in triangulation")
    tables = _tables(tri)
    touched = {orbit_id for orbit_id, _slot, _dart in _face_hits(tri)[face]}
    return len(touched) == len(tables.orbits)


def is_simple(zigzag: Zigzag) -> bool:
    """Whether the vertex cycle of the zigzag has pairwise distinct entries."""
    return zigzag.is_simple


def gauss_code(tri: Triangulation) -> typing.Tuple[str, ...]:
    """The double-occurrence word of a z-knotted triangulation.

    Reads the canonical zigzag (the smaller of the two directed forms) as a
    sequence of undirected edge symbols "u-v"; every symbol occurs exactly
    twice and the word length is 2E.
    """
    if not is_z_knotted(tri):
        raise NotZKnotted("gauss_code requires a z-knotted triangulation")
    atlas = _atlas(tri)
    representative = min(atlas.zigzags)
    return tuple(f"{dart.edge[0]}-{dart.edge[1]}" for dart in representative.darts)
