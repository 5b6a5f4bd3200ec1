"""Triangulations of closed surfaces as pure face sets.

A triangulation is a connected simple graph embedded in a closed (not
necessarily orientable) surface with every face a triangle.  Two axioms pin
the combinatorics down:

(E1) every edge lies in exactly two distinct faces;
(E2) two distinct faces meet in at most an edge (never a whole triple).

Under (E1)/(E2) the face set alone determines all incidence, so a
``Triangulation`` stores nothing but its sorted faces; edges, the
edge-to-faces map and the vertex set are derived at construction time.
Vertex labels are strings ordered lexicographically; integer labels are
canonicalized to their decimal text so that relabeling during surgery stays
stable.
"""

import typing
from dataclasses import dataclass

from .errors import EdgeNotInFace, ValidationFailure

Vertex = str
Edge = typing.Tuple[str, str]
Face = typing.Tuple[str, str, str]

# Validation rule identifiers used in reports.
DUPLICATE_FACE = "DuplicateFace"
EDGE_DEGREE = "EdgeDegreeViolation"
NON_TRIANGLE = "NonTriangleInput"
DISCONNECTED = "Disconnected"


class Dart(typing.NamedTuple):
    """An oriented edge written tail -> head; ``-dart`` swaps the ends."""

    tail: Vertex
    head: Vertex

    def __neg__(self) -> "Dart":
        return Dart(self.head, self.tail)

    @property
    def edge(self) -> Edge:
        return make_edge(self.tail, self.head)

    def __repr__(self):
        return f"{self.tail}>{self.head}"


def make_edge(u: Vertex, v: Vertex) -> Edge:
    """The undirected edge {u, v} in canonical (sorted) order."""
    if u == v:
        raise ValueError(f"degenerate edge on vertex {u!r}")
    return (u, v) if u < v else (v, u)


def make_face(a: Vertex, b: Vertex, c: Vertex) -> Face:
    """The face {a, b, c} in canonical (sorted) order."""
    face = (a, b, c)
    if len(set(face)) != 3:
        raise ValueError(f"degenerate face {face!r}")
    return typing.cast(Face, tuple(sorted(face)))


def face_edges(face: Face) -> typing.Tuple[Edge, Edge, Edge]:
    """The three edges of a canonical face, each in canonical order."""
    a, b, c = face
    return ((a, b), (a, c), (b, c))


def third_vertex(face: Face, u: Vertex, v: Vertex) -> Vertex:
    """The vertex of ``face`` distinct from ``u`` and ``v``."""
    for x in face:
        if x != u and x != v:
            return x
    raise ValueError(f"face {face!r} has no vertex outside {{{u!r}, {v!r}}}")


def omega(face: Face) -> typing.Tuple[Dart, ...]:
    """The six darts of a face in canonical order.

    With sorted vertices v1 < v2 < v3 the order is the rotation cycle of
    v1->v2 followed by the negations: (v1v2, v2v3, v3v1, v2v1, v3v2, v1v3).
    """
    a, b, c = make_face(*face)
    return (Dart(a, b), Dart(b, c), Dart(c, a), Dart(b, a), Dart(c, b), Dart(a, c))


def face_rotation(face: Face, dart: Dart) -> Dart:
    """The in-face rotation: xy -> yz for distinct vertices x, y, z of the face.

    A product of two 3-cycles on the six darts of the face; applying it three
    times is the identity, and rotation(e) = e' implies rotation(-e') = -e.
    """
    if dart.tail not in face or dart.head not in face or dart.tail == dart.head:
        raise EdgeNotInFace(f"dart {dart!r} is not on face {face!r}")
    return Dart(dart.head, third_vertex(face, dart.tail, dart.head))


def face_rotation_inverse(face: Face, dart: Dart) -> Dart:
    """The dart e0 with rotation(e0) = dart."""
    if dart.tail not in face or dart.head not in face or dart.tail == dart.head:
        raise EdgeNotInFace(f"dart {dart!r} is not on face {face!r}")
    return Dart(third_vertex(face, dart.tail, dart.head), dart.tail)


class Violation(typing.NamedTuple):
    """One validation failure: rule id, offending subject, message."""

    rule: str
    subject: tuple
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating a face list; ok iff no violations."""

    violations: typing.Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(f"{v.rule}: {v.message}" for v in self.violations)


def _canonical_label(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    raise TypeError(f"vertex label must be text or integer, got {x!r}")


def _clean_faces(raw) -> typing.Tuple[typing.List[Face], typing.List[Violation]]:
    """Canonicalize raw triples, collecting NonTriangleInput/DuplicateFace."""
    violations = []
    seen: typing.Dict[Face, int] = {}
    clean: typing.List[Face] = []
    for i, item in enumerate(raw):
        entry = tuple(item)
        if len(entry) != 3:
            violations.append(Violation(
                NON_TRIANGLE, (i, entry),
                f"face #{i} has {len(entry)} vertices, expected 3"))
            continue
        try:
            labels = tuple(_canonical_label(x) for x in entry)
        except TypeError as exc:
            violations.append(Violation(NON_TRIANGLE, (i, entry), f"face #{i}: {exc}"))
            continue
        if "" in labels:
            violations.append(Violation(
                NON_TRIANGLE, (i, entry), f"face #{i} has an empty vertex label"))
            continue
        if len(set(labels)) != 3:
            violations.append(Violation(
                NON_TRIANGLE, (i, entry),
                f"face #{i} repeats a vertex: {labels}"))
            continue
        face = typing.cast(Face, tuple(sorted(labels)))
        if face in seen:
            violations.append(Violation(
                DUPLICATE_FACE, (seen[face], i, face),
                f"face {face} appears more than once (E2)"))
            continue
        seen[face] = i
        clean.append(face)
    return sorted(clean), violations


def _structural_violations(faces: typing.List[Face]) -> typing.List[Violation]:
    """Check (E1) and connectedness on a deduplicated face list."""
    violations = []
    if not faces:
        violations.append(Violation(NON_TRIANGLE, (), "empty face list"))
        return violations

    edge_faces: typing.Dict[Edge, typing.List[Face]] = {}
    for face in faces:
        for edge in face_edges(face):
            edge_faces.setdefault(edge, []).append(face)
    for edge, incident in sorted(edge_faces.items()):
        if len(incident) != 2:
            violations.append(Violation(
                EDGE_DEGREE, (edge,),
                f"edge {edge} lies in {len(incident)} face(s), expected 2 (E1)"))

    # Vertex graph connectivity.
    adjacency: typing.Dict[str, set] = {}
    for (u, v) in edge_faces:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    start = min(adjacency)
    reached = {start}
    stack = [start]
    while stack:
        for w in adjacency[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(adjacency):
        missing = sorted(set(adjacency) - reached)
        violations.append(Violation(
            DISCONNECTED, tuple(missing),
            f"vertex graph is disconnected; unreachable vertices {missing}"))

    # Face adjacency graph connectivity (faces adjacent = share an edge).
    face_reached = {faces[0]}
    stack = [faces[0]]
    while stack:
        face = stack.pop()
        for edge in face_edges(face):
            for neighbor in edge_faces[edge]:
                if neighbor not in face_reached:
                    face_reached.add(neighbor)
                    stack.append(neighbor)
    if len(face_reached) != len(faces):
        missing_faces = sorted(set(faces) - face_reached)
        violations.append(Violation(
            DISCONNECTED, tuple(missing_faces),
            f"face adjacency graph is disconnected; "
            f"{len(missing_faces)} unreachable face(s)"))
    return violations


def validate(faces) -> ValidationReport:
    """Validate a face list (or an existing triangulation) against (E1)/(E2).

    Accepts either a ``Triangulation`` or any iterable of vertex triples.
    Reports every violation found; never raises.  Idempotent: validating a
    constructed triangulation always reports ok.
    """
    if isinstance(faces, Triangulation):
        raw = list(faces.faces)
    else:
        raw = list(faces)
    clean, violations = _clean_faces(raw)
    violations.extend(_structural_violations(clean))
    return ValidationReport(tuple(violations))


class Triangulation:
    """A validated triangulation, immutable and hashable.

    Construction canonicalizes the face list, validates it strictly and
    derives all incidence; an invalid face list raises ``ValidationFailure``
    instead of producing an object.  Instances are value objects (equality
    and hash by face set) and safe to share between threads; every operation
    on them is a pure function.
    """

    __slots__ = ("faces", "edges", "edge_faces", "vertices",
                 "_face_set", "_edge_set", "_cache")

    def __init__(self, faces):
        raw = list(faces.faces) if isinstance(faces, Triangulation) else list(faces)
        clean, violations = _clean_faces(raw)
        violations.extend(_structural_violations(clean))
        if violations:
            raise ValidationFailure(ValidationReport(tuple(violations)))

        edge_faces: typing.Dict[Edge, typing.List[Face]] = {}
        for face in clean:
            for edge in face_edges(face):
                edge_faces.setdefault(edge, []).append(face)

        self.faces: typing.Tuple[Face, ...] = tuple(clean)
        self.edges: typing.Tuple[Edge, ...] = tuple(sorted(edge_faces))
        self.edge_faces: typing.Dict[Edge, typing.Tuple[Face, Face]] = {
            edge: (incident[0], incident[1])
            for edge, incident in edge_faces.items()
        }
        vertex_set = {v for face in clean for v in face}
        self.vertices: typing.Tuple[str, ...] = tuple(sorted(vertex_set))
        self._face_set = frozenset(clean)
        self._edge_set = frozenset(self.edges)
        self._cache: dict = {}

    def has_face(self, face: Face) -> bool:
        return face in self._face_set

    def has_edge(self, edge: Edge) -> bool:
        return edge in self._edge_set

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return (f"Triangulation({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.faces)} faces)")


def build_triangulation(face_list) -> Triangulation:
    """Build a triangulation from vertex triples, or raise ValidationFailure."""
    return Triangulation(face_list)


def other_face(tri: Triangulation, edge: Edge, face: Face) -> Face:
    """The unique face other than ``face`` containing ``edge`` (exists by E1)."""
    edge = make_edge(*edge)
    face = make_face(*face)
    if not tri.has_face(face) or edge not in tri.edge_faces:
        raise EdgeNotInFace(f"edge {edge!r} / face {face!r} not in triangulation")
    if edge[0] not in face or edge[1] not in face:
        raise EdgeNotInFace(f"edge {edge!r} is not an edge of face {face!r}")
    first, second = tri.edge_faces[edge]
    return second if first == face else first


def euler_characteristic(tri: Triangulation) -> int:
    """V - E + F."""
    return len(tri.vertices) - len(tri.edges) + len(tri.faces)


def _reference_boundary(face: Face) -> typing.Dict[Edge, Dart]:
    """One of the two boundary orientations of a face, keyed by edge."""
    a, b, c = face
    cycle = (Dart(a, b), Dart(b, c), Dart(c, a))
    return {dart.edge: dart for dart in cycle}


def is_orientable(tri: Triangulation) -> bool:
    """Whether the faces admit cyclic orders inducing opposite directions
    on every shared edge.

    Propagates an orientation sign over the face adjacency graph (connected
    by validation); a sign conflict certifies non-orientability.
    """
    reference = {face: _reference_boundary(face) for face in tri.faces}
    sign = {tri.faces[0]: 1}
    stack = [tri.faces[0]]
    while stack:
        face = stack.pop()
        for edge in face_edges(face):
            neighbor = other_face(tri, edge, face)
            same_direction = reference[face][edge] == reference[neighbor][edge]
            required = -sign[face] if same_direction else sign[face]
            if neighbor not in sign:
                sign[neighbor] = required
                stack.append(neighbor)
            elif sign[neighbor] != required:
                return False
    return True
