"""Z-monodromy of a face and its classification into seven shapes.

For a face F the z-monodromy sends each dart e of F to the first dart on an
edge of F that the zigzag through the consecutive pair (rotation^-1(e), e)
meets after e.  Relative to the face rotation D there are exactly seven
possible shapes:

  M1  identity
  M2  D
  M3  (-e1,e2,e3)(-e3,-e2,e1)  with (e1,e2,e3) a cycle of D
  M4  (e1,-e2)(e2,-e1), e3 and -e3 fixed, with (e1,e2,e3) a cycle of D
  M5  D^-1
  M6  (-e1,e2,e3)(-e3,-e2,e1)  with (e1,e2,e3) a cycle of D^-1
  M7  (e1,e2)(-e1,-e2), e3 and -e3 fixed, with (e1,e2,e3) a cycle of D

The first four shapes are exactly the ones for which only a single zigzag
pair meets the face, which is equivalent to D composed with the monodromy
being two disjoint 3-cycles; that criterion drives the gluing machinery.
"""

import typing
from dataclasses import dataclass

from . import zigzag as _zz
from .core import Dart, Face, Triangulation, face_rotation, make_face, omega
from .errors import FaceNotFound, UnclassifiableMonodromy


class DartPermutation:
    """A permutation of the six darts of one face."""

    __slots__ = ("face", "domain", "_map")

    def __init__(self, face: Face, mapping: typing.Mapping[Dart, Dart]):
        self.face = make_face(*face)
        self.domain = omega(self.face)
        domain_set = set(self.domain)
        if set(mapping) != domain_set or set(mapping.values()) != domain_set:
            raise ValueError(f"mapping is not a permutation of the darts of {face}")
        self._map = dict(mapping)

    @classmethod
    def identity(cls, face: Face) -> "DartPermutation":
        return cls(face, {dart: dart for dart in omega(face)})

    @classmethod
    def rotation(cls, face: Face) -> "DartPermutation":
        """The face rotation D as a permutation of the face's darts."""
        return cls(face, {dart: face_rotation(face, dart) for dart in omega(face)})

    def __call__(self, dart: Dart) -> Dart:
        return self._map[dart]

    def compose(self, other: "DartPermutation") -> "DartPermutation":
        """self after other (apply ``other`` first)."""
        if other.face != self.face:
            raise ValueError("cannot compose permutations of different faces")
        return DartPermutation(
            self.face, {dart: self._map[other._map[dart]] for dart in self.domain})

    def inverse(self) -> "DartPermutation":
        return DartPermutation(
            self.face, {image: dart for dart, image in self._map.items()})

    def cycles(self) -> typing.Tuple[typing.Tuple[Dart, ...], ...]:
        """Disjoint cycles (fixed points included), in canonical dart order."""
        seen = set()
        out = []
        for start in self.domain:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self._map[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self._map[current]
            out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> typing.Tuple[int, ...]:
        """Cycle lengths, longest first, fixed points counted as 1."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @property
    def is_identity(self) -> bool:
        return all(self._map[dart] == dart for dart in self.domain)

    def as_dict(self) -> typing.Dict[Dart, Dart]:
        return dict(self._map)

    def __eq__(self, other):
        return (isinstance(other, DartPermutation)
                and self.face == other.face and self._map == other._map)

    def __hash__(self):
        return hash((self.face, tuple(self._map[dart] for dart in self.domain)))

    def __repr__(self):
        parts = []
        for cycle in self.cycles():
            if len(cycle) > 1:
                parts.append("(" + ",".join(map(repr, cycle)) + ")")
        return "DartPermutation[" + ("".join(parts) or "id") + "]"


Witness = typing.Tuple[Dart, Dart, Dart]


@dataclass(frozen=True)
class MonodromyType:
    """A monodromy shape tag M1..M7 plus the cycle witnessing it.

    The witness is the dart triple (e1, e2, e3) appearing in the shape's
    formula; M1, M2 and M5 need none.  ``expand`` rebuilds the permutation
    from the tag and witness, so a classification can always be replayed.
    """

    tag: str
    witness: typing.Optional[Witness] = None

    def expand(self, rotation: DartPermutation) -> DartPermutation:
        """The permutation this type describes, relative to the face rotation."""
        face = rotation.face
        if self.tag == "M1":
            return DartPermutation.identity(face)
        if self.tag == "M2":
            return DartPermutation(face, rotation.as_dict())
        if self.tag == "M5":
            return rotation.inverse()
        if self.witness is None:
            raise ValueError(f"type {self.tag} requires a witness")
        e1, e2, e3 = self.witness
        if self.tag in ("M3", "M6"):
            mapping = _three_cycle_pair_pattern(e1, e2, e3)
        elif self.tag == "M4":
            mapping = _crossed_transposition_pattern(e1, e2, e3)
        elif self.tag == "M7":
            mapping = _straight_transposition_pattern(e1, e2, e3)
        else:
            raise ValueError(f"unknown monodromy tag {self.tag!r}")
        return DartPermutation(face, mapping)


def _three_cycle_pair_pattern(e1, e2, e3):
    """(-e1,e2,e3)(-e3,-e2,e1) as a mapping (shapes M3 and M6)."""
    return {-e1: e2, e2: e3, e3: -e1, -e3: -e2, -e2: e1, e1: -e3}


def _crossed_transposition_pattern(e1, e2, e3):
    """(e1,-e2)(e2,-e1) with e3, -e3 fixed (shape M4)."""
    return {e1: -e2, -e2: e1, e2: -e1, -e1: e2, e3: e3, -e3: -e3}


def _straight_transposition_pattern(e1, e2, e3):
    """(e1,e2)(-e1,-e2) with e3, -e3 fixed (shape M7)."""
    return {e1: e2, e2: e1, -e1: -e2, -e2: -e1, e3: e3, -e3: -e3}


def _rotations(cycle: typing.Tuple[Dart, ...]) -> typing.List[Witness]:
    a, b, c = cycle
    return [(a, b, c), (b, c, a), (c, a, b)]


def z_monodromy(tri: Triangulation, face: Face) -> DartPermutation:
    """The z-monodromy of a face.

    Bijective, never maps a dart to its own negation, satisfies the negation
    law M(e) = e' => M(-e') = -e, and has no cycle longer than 3.
    """
    face = make_face(*face)
    if not tri.has_face(face):
        raise FaceNotFound(f"face {face!r} not in triangulation")
    return DartPermutation(face, _monodromy_maps(tri)[face])


def _monodromy_maps(tri: Triangulation) -> typing.Dict[Face, typing.Dict[Dart, Dart]]:
    """Monodromy mappings for every face, computed from the orbit tables.

    For a seed position (e, F) the monodromy image is the dart of the next
    position in the same orbit (cyclically) that lies on an edge of F; the
    per-face hit lists make that a lookup instead of a walk.
    """
    maps = tri._cache.get("monodromy_maps")
    if maps is not None:
        return maps
    tables = _zz._tables(tri)
    hits = _zz._face_hits(tri)
    maps = {}
    for face in tri.faces:
        entries = hits[face]  # sorted (orbit, slot, dart)
        by_orbit: typing.Dict[int, list] = {}
        for orbit_id, slot, dart in entries:
            by_orbit.setdefault(orbit_id, []).append((slot, dart))
        mapping = {}
        for dart in omega(face):
            i = tables.index[_zz.Position(dart, face)]
            orbit_id = tables.orbit_of[i]
            slot = tables.slot_of[i]
            slots = by_orbit[orbit_id]
            following = [entry for entry in slots if entry[0] > slot]
            mapping[dart] = (following[0] if following else slots[0])[1]
        maps[face] = mapping
    tri._cache["monodromy_maps"] = maps
    return maps


def classify(monodromy: DartPermutation,
             rotation: DartPermutation) -> MonodromyType:
    """Match a z-monodromy against the seven shapes.

    Tags are tried in the order M1, M2, M5, M3, M6, M4, M7, searching witness
    cycles over the rotation's two 3-cycles and their rotations; the shapes
    are mutually exclusive, so the order only fixes the witness choice.
    """
    if monodromy.face != rotation.face:
        raise ValueError("monodromy and rotation belong to different faces")
    if rotation.cycle_type() != (3, 3):
        raise ValueError("rotation argument is not a face rotation")
    if monodromy.is_identity:
        return MonodromyType("M1")
    if monodromy == rotation:
        return MonodromyType("M2")
    if monodromy == rotation.inverse():
        return MonodromyType("M5")

    mapping = monodromy.as_dict()
    rotation_cycles = rotation.cycles()
    inverse_cycles = rotation.inverse().cycles()
    searches = (
        ("M3", rotation_cycles, _three_cycle_pair_pattern),
        ("M6", inverse_cycles, _three_cycle_pair_pattern),
        ("M4", rotation_cycles, _crossed_transposition_pattern),
        ("M7", rotation_cycles, _straight_transposition_pattern),
    )
    for tag, cycles, pattern in searches:
        for cycle in cycles:
            for witness in _rotations(cycle):
                if pattern(*witness) == mapping:
                    return MonodromyType(tag, witness)
    raise UnclassifiableMonodromy(
        f"permutation {monodromy!r} of face {monodromy.face} matches no shape")


def is_two_disjoint_3cycles(permutation: DartPermutation) -> bool:
    """Whether the permutation is a product of two disjoint 3-cycles."""
    return permutation.cycle_type() == (3, 3)


def locally_z_knotted_via_monodromy(tri: Triangulation, face: Face) -> bool:
    """Local knottedness decided algebraically: D o M must be two 3-cycles.

    Always agrees with counting the zigzags through the face.
    """
    monodromy = z_monodromy(tri, face)
    rotation = DartPermutation.rotation(face)
    return is_two_disjoint_3cycles(rotation.compose(monodromy))


def face_types(tri: Triangulation) -> typing.Dict[Face, MonodromyType]:
    """Classified z-monodromy for every face, keyed in face order."""
    maps = _monodromy_maps(tri)
    out = {}
    for face in tri.faces:
        monodromy = DartPermutation(face, maps[face])
        out[face] = classify(monodromy, DartPermutation.rotation(face))
    return out
