"""Z-knotted shredding: sum sphere patches onto faces until one zigzag remains.

Every face whose z-monodromy is M5, M6 or M7 blocks knottedness.  Each such
face can be repaired by a connected sum with a z-knotted sphere patch:

* M5/M6 faces have a monodromy that is itself two disjoint 3-cycles, so a
  patch carrying an identity-monodromy face works under every special map;
  the smallest such patch is the m1 sum of two 6-gonal bipyramids.
* M7 faces pair with an M3 face when the witness cycles are aligned; the
  3-gonal bipyramid provides one.

After a repair the patch's remaining faces are all locally z-knotted and the
host's locally z-knotted faces stay so, hence the count of bad faces strictly
decreases and the loop terminates in a z-knotted triangulation of the same
surface.  Every step is logged in a replayable certificate.
"""

import functools
import json
import typing
from dataclasses import dataclass

from .core import Face, Triangulation, euler_characteristic, make_face
from .document import serialize
from .errors import (InvalidMonodromyType, MalformedDocument, NoValidMap,
                     TrizigError)
from .generators import bipyramid, example_sum
from .monodromy import DartPermutation, classify, face_types, z_monodromy
from .surgery import (SpecialMap, connected_sum, enumerate_special_maps,
                      gluing_condition)
from .zigzag import all_zigzags, is_essential, is_z_knotted

CERTIFICATE_FORMAT = "tri-shred-cert/1"

BAD_TAGS = ("M5", "M6", "M7")

PATCH_SPHERE_M1 = "sphere-m1"
PATCH_BP3_M3 = "bp3-m3"


@dataclass(frozen=True)
class Patch:
    """A z-knotted sphere with one designated face of known monodromy type."""

    patch_id: str
    triangulation: Triangulation
    designated_face: Face
    designated_type: str


@functools.lru_cache(maxsize=None)
def _load_patch(patch_id: str) -> Patch:
    if patch_id == PATCH_SPHERE_M1:
        tri = example_sum("m1", 3, 3)
        patch = Patch(patch_id, tri, make_face("a", "2", "3"), "M1")
    elif patch_id == PATCH_BP3_M3:
        patch = Patch(patch_id, bipyramid(3), make_face("a", "1", "2"), "M3")
    else:
        raise InvalidMonodromyType(f"unknown patch id {patch_id!r}")
    _verify_patch(patch)
    return patch


def _verify_patch(patch: Patch) -> None:
    tri = patch.triangulation
    if not is_z_knotted(tri):
        raise AssertionError(f"patch {patch.patch_id} is not z-knotted")
    if euler_characteristic(tri) != 2:
        raise AssertionError(f"patch {patch.patch_id} is not a sphere")
    types = face_types(tri)
    if types[patch.designated_face].tag != patch.designated_type:
        raise AssertionError(
            f"patch {patch.patch_id}: designated face classifies as "
            f"{types[patch.designated_face].tag}, expected {patch.designated_type}")
    if not all(is_essential(tri, face) for face in tri.faces):
        raise AssertionError(f"patch {patch.patch_id} has a non-essential face")


def patch_for(bad_type: str) -> Patch:
    """The repair patch for a face of type M5, M6 or M7."""
    if bad_type in ("M5", "M6"):
        return _load_patch(PATCH_SPHERE_M1)
    if bad_type == "M7":
        return _load_patch(PATCH_BP3_M3)
    raise InvalidMonodromyType(
        f"no patch for type {bad_type!r}; expected M5, M6 or M7")


def find_gluing_map(tri: Triangulation, face: Face, patch: Patch) -> SpecialMap:
    """The first special map (enumeration order) satisfying the gluing condition.

    A valid map always exists for the patches above; failure to find one is
    an implementation bug and raises NoValidMap.
    """
    for gluing in enumerate_special_maps(face, patch.designated_face):
        if gluing_condition(tri, face, patch.triangulation,
                            patch.designated_face, gluing):
            return gluing
    raise NoValidMap(
        f"no special map glues patch {patch.patch_id} onto face {face!r}; "
        f"this should be impossible")


@dataclass(frozen=True)
class ShredStep:
    """One logged repair: which face, its type, the patch, map and relabeling."""

    face: Face
    bad_type: str
    patch_id: str
    vertex_map: typing.Tuple[typing.Tuple[str, str], ...]
    relabeling: typing.Tuple[typing.Tuple[str, str], ...]


@dataclass(frozen=True)
class ShredCertificate:
    """A replayable log of shredding surgeries.

    Replaying the steps from the input reproduces the output bit-exactly;
    the step count never exceeds the input's count of M5/M6/M7 faces.
    """

    steps: typing.Tuple[ShredStep, ...]
    final_zigzag_length: int

    def to_json(self) -> str:
        doc = {
            "format": CERTIFICATE_FORMAT,
            "final_zigzag_length": self.final_zigzag_length,
            "steps": [
                {
                    "face": list(step.face),
                    "bad_type": step.bad_type,
                    "patch": step.patch_id,
                    "map": dict(step.vertex_map),
                    "relabeling": dict(step.relabeling),
                }
                for step in self.steps
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ShredCertificate":
        try:
            doc = json.loads(text)
        except ValueError as exc:
            raise MalformedDocument(f"not valid JSON: {exc}") from None
        if not isinstance(doc, dict) or doc.get("format") != CERTIFICATE_FORMAT:
            raise MalformedDocument("missing or unsupported certificate format tag")
        try:
            steps = tuple(
                ShredStep(
                    face=make_face(*entry["face"]),
                    bad_type=entry["bad_type"],
                    patch_id=entry["patch"],
                    vertex_map=tuple(sorted(entry["map"].items())),
                    relabeling=tuple(sorted(entry["relabeling"].items())),
                )
                for entry in doc["steps"]
            )
            length = int(doc["final_zigzag_length"])
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise MalformedDocument(f"malformed certificate: {exc}") from None
        return cls(steps, length)


def _bad_faces(tri: Triangulation) -> typing.List[typing.Tuple[Face, str]]:
    """Faces classifying M5/M6/M7, in canonical face order."""
    types = face_types(tri)
    return [(face, types[face].tag)
            for face in tri.faces if types[face].tag in BAD_TAGS]


def _repair(tri: Triangulation, face: Face,
            bad_type: str) -> typing.Tuple[Triangulation, ShredStep]:
    patch = patch_for(bad_type)
    gluing = find_gluing_map(tri, face, patch)
    result = connected_sum(tri, face, patch.triangulation,
                           patch.designated_face, gluing)
    step = ShredStep(face, bad_type, patch.patch_id, gluing.pairs,
                     result.relabeling)
    return result.triangulation, step


def shred_step(tri: Triangulation, face: Face) -> Triangulation:
    """Repair one face of type M5/M6/M7 by gluing its patch.

    The count of faces with types in {M5, M6, M7} strictly decreases: the
    patched face disappears, the patch's faces arrive locally z-knotted, and
    no locally z-knotted face of the host loses that property.
    """
    face = make_face(*face)
    tag = classify(z_monodromy(tri, face),
                   DartPermutation.rotation(face)).tag
    if tag not in BAD_TAGS:
        raise InvalidMonodromyType(
            f"face {face!r} has type {tag}, nothing to repair")
    repaired, _step = _repair(tri, face, tag)
    return repaired


def shred(tri: Triangulation) -> typing.Tuple[Triangulation, ShredCertificate]:
    """Construct a z-knotted shredding of the triangulation.

    Repeatedly repairs the least bad face in canonical order until no face
    classifies M5/M6/M7, then verifies the result twice over: every face must
    classify M1..M4 and the orbit count must be exactly one zigzag pair.
    A z-knotted input comes back unchanged with an empty certificate.
    """
    steps = []
    current = tri
    bad = _bad_faces(current)
    while bad:
        face, tag = bad[0]
        current, record = _repair(current, face, tag)
        steps.append(record)
        remaining = _bad_faces(current)
        if len(remaining) >= len(bad):
            raise AssertionError("bad face count failed to decrease")
        bad = remaining

    knotted = is_z_knotted(current)
    types_ok = not _bad_faces(current)
    if not (knotted and types_ok):
        raise AssertionError(
            f"shredding postcondition failed: z-knotted={knotted}, "
            f"all faces M1..M4={types_ok}")
    final_length = all_zigzags(current).zigzags[0].length
    return current, ShredCertificate(tuple(steps), final_length)


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a certificate replay; falsy when any problem was found."""

    ok: bool
    problems: typing.Tuple[str, ...]

    def __bool__(self):
        return self.ok


def verify_certificate(source: Triangulation, certificate: ShredCertificate,
                       target: Triangulation) -> VerificationResult:
    """Replay a certificate and compare against the claimed output.

    Checks that every step applies, that the replayed result serializes
    byte-identically to the target, that the target is z-knotted, and that
    the recorded zigzag length matches.
    """
    problems = []
    current = source
    for i, step in enumerate(certificate.steps):
        try:
            patch = _load_patch(step.patch_id)
            gluing = SpecialMap(step.face, patch.designated_face, step.vertex_map)
            result = connected_sum(
                current, step.face, patch.triangulation, patch.designated_face,
                gluing, relabeling=dict(step.relabeling))
        except (TrizigError, ValueError) as exc:
            problems.append(f"step {i} does not apply: {exc}")
            break
        current = result.triangulation
    else:
        if serialize(current) != serialize(target):
            problems.append(
                f"replayed output differs from target: replay has "
                f"{len(current.faces)} face(s) vs {len(target.faces)}, first "
                f"differing face "
                f"{next(iter(sorted(set(current.faces) ^ set(target.faces))), None)}")
        if not is_z_knotted(target):
            problems.append("target is not z-knotted")
        else:
            actual = all_zigzags(target).zigzags[0].length
            if actual != certificate.final_zigzag_length:
                problems.append(
                    f"certificate records zigzag length "
                    f"{certificate.final_zigzag_length}, target has {actual}")
    return VerificationResult(not problems, tuple(problems))
