"""Alternating knot/link/twist diagrams as combinatorial maps.

A diagram is a connected 4-regular map on the sphere whose vertices are
crossings.  Each vertex carries four darts (half-edges) in cyclic embedding
order, alternating outgoing and incoming: the two outgoing darts form the
upper (unstable) lane of the crossing, the two incoming darts the lower
(stable) lane.  That orientation rule is exactly what makes the projected
curve alternating, and it two-colors the faces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .limits import max_vertices  # noqa: F401  (re-exported convenience)

OUT = "out"
IN = "in"

KINDS = ("knot", "link", "twist")


class DiagramError(Exception):
    """Raised for operations on structurally unusable diagrams."""


class DiagramFormatError(DiagramError):
    """Raised when parsing a serialized diagram fails."""


@dataclass(frozen=True)
class Dart:
    """Half of an oriented edge, attached to `vertex`.

    `direction` is OUT when the edge points away from the vertex, IN when it
    points toward it.  `twin` is the dart id of the other half.
    """

    id: int
    vertex: int
    twin: int
    direction: str


@dataclass(frozen=True)
class Diagram:
    """Immutable combinatorial map of a 2-in/2-out 4-regular sphere graph.

    `rotation[v]` lists the four darts at vertex v in cyclic embedding
    order; validity requires the directions to alternate around each
    vertex.  All operations treat diagrams as values and return new ones.
    """

    kind: str
    vertex_count: int
    darts: tuple[Dart, ...]
    rotation: tuple[tuple[int, int, int, int], ...]

    # -- basic accessors --------------------------------------------------

    def twin(self, dart_id: int) -> int:
        return self.darts[dart_id].twin

    def vertex_of(self, dart_id: int) -> int:
        return self.darts[dart_id].vertex

    def direction(self, dart_id: int) -> str:
        return self.darts[dart_id].direction

    def rotation_successor(self, dart_id: int) -> int:
        ring = self.rotation[self.vertex_of(dart_id)]
        return ring[(ring.index(dart_id) + 1) % 4]

    def rotation_predecessor(self, dart_id: int) -> int:
        ring = self.rotation[self.vertex_of(dart_id)]
        return ring[(ring.index(dart_id) - 1) % 4]

    def next_in_face(self, dart_id: int) -> int:
        """Face-trace step: rotation successor of the twin."""
        return self.rotation_successor(self.twin(dart_id))

    def edges(self) -> list[tuple[int, int]]:
        """Directed edges as (tail_vertex, head_vertex), one per edge,
        ordered by tail dart id."""
        return [(d.vertex, self.vertex_of(d.twin))
                for d in self.darts if d.direction == OUT]

    def edge_darts(self) -> list[tuple[int, int]]:
        """(tail_dart, head_dart) pairs, ordered by tail dart id."""
        return [(d.id, d.twin) for d in self.darts if d.direction == OUT]

    def loop_count(self) -> int:
        return sum(1 for d in self.darts
                   if d.direction == OUT and self.vertex_of(d.twin) == d.vertex)

    def __str__(self) -> str:
        return f"<{self.kind} diagram, V={self.vertex_count}>"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def build_diagram(kind: str,
                  vertex_count: int,
                  edges: Sequence[tuple[int, int]],
                  rotations: Sequence[Sequence[tuple[int, str]]],
                  check: bool = True) -> Diagram:
    """Assemble a diagram from directed edges and per-vertex edge-end orders.

    `rotations[v]` lists four `(edge_index, end)` pairs, `end` being "T"
    for the tail of the edge or "H" for its head.  Edge i gets tail dart 2i
    and head dart 2i+1.
    """
    darts: list[Dart | None] = [None] * (4 * vertex_count)
    if len(edges) != 2 * vertex_count:
        raise DiagramError(
            f"need {2 * vertex_count} edges for {vertex_count} vertices, "
            f"got {len(edges)}")
    rotation: list[tuple[int, int, int, int]] = []
    for v, ring in enumerate(rotations):
        ids = []
        for edge_idx, end in ring:
            u, w = edges[edge_idx]
            if end == "T":
                dart_id, vert, direction = 2 * edge_idx, u, OUT
            elif end == "H":
                dart_id, vert, direction = 2 * edge_idx + 1, w, IN
            else:
                raise DiagramError(f"edge end must be 'T' or 'H', got {end!r}")
            if vert != v:
                raise DiagramError(
                    f"edge {edge_idx} end {end} belongs to vertex {vert}, "
                    f"listed under vertex {v}")
            darts[dart_id] = Dart(dart_id, v, dart_id ^ 1, direction)
            ids.append(dart_id)
        if len(ids) != 4:
            raise DiagramError(f"vertex {v} lists {len(ids)} darts, needs 4")
        rotation.append(tuple(ids))
    if any(d is None for d in darts):
        raise DiagramError("some edge ends are not placed in any rotation")
    diagram = Diagram(kind, vertex_count, tuple(darts), tuple(rotation))
    if check:
        problems = validate(diagram)
        if problems:
            raise DiagramError("invalid construction: " + "; ".join(problems))
    return diagram


def _rebuild(kind: str,
             vertex_count: int,
             dart_fields: dict[int, tuple[int, int, str]],
             rotation_by_vertex: Sequence[Sequence[int]],
             check: bool = True) -> Diagram:
    """Re-assemble a diagram from surviving darts with arbitrary old ids.

    `dart_fields` maps old dart id -> (vertex, old twin id, direction);
    ids are compacted densely preserving order.
    """
    old_ids = sorted(dart_fields)
    new_id = {old: new for new, old in enumerate(old_ids)}
    darts = tuple(
        Dart(new_id[old], dart_fields[old][0], new_id[dart_fields[old][1]],
             dart_fields[old][2])
        for old in old_ids)
    rotation = tuple(tuple(new_id[d] for d in ring)
                     for ring in rotation_by_vertex)
    diagram = Diagram(kind, vertex_count, darts, rotation)
    if check:
        problems = validate(diagram)
        if problems:
            raise DiagramError("invalid rebuild: " + "; ".join(problems))
    return diagram


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(d: Diagram) -> list[str]:
    """All violated invariants as human-readable strings; empty means valid.

    Violations are data, not exceptions: arbitrary candidate structures are
    accepted and reported on.
    """
    problems: list[str] = []
    if d.kind not in KINDS:
        problems.append(f"kind: {d.kind!r} is not one of {KINDS}")
    if d.vertex_count < 1:
        problems.append("vertex count: V must be >= 1")
        return problems
    n_darts = 4 * d.vertex_count
    if len(d.darts) != n_darts:
        problems.append(
            f"dart count: expected {n_darts} darts, found {len(d.darts)}")
        return problems
    for i, dart in enumerate(d.darts):
        if dart.id != i:
            problems.append(f"dart ids: dart at index {i} has id {dart.id}")
            return problems
        if not 0 <= dart.vertex < d.vertex_count:
            problems.append(f"dart {i}: vertex {dart.vertex} out of range")
            return problems
        if not 0 <= dart.twin < n_darts:
            problems.append(f"dart {i}: twin {dart.twin} out of range")
            return problems

    for dart in d.darts:
        if dart.twin == dart.id:
            problems.append(f"twin involution: dart {dart.id} is its own twin")
        elif d.darts[dart.twin].twin != dart.id:
            problems.append(
                f"twin involution: twin({dart.twin}) != {dart.id}")
        elif dart.id < dart.twin:
            other = d.darts[dart.twin]
            if {dart.direction, other.direction} != {OUT, IN}:
                problems.append(
                    f"twin directions: edge ({dart.id},{other.id}) must have "
                    "one out and one in dart")
    if problems:
        return problems

    if len(d.rotation) != d.vertex_count:
        problems.append("rotation: one ring per vertex required")
        return problems
    for v in range(d.vertex_count):
        ring = d.rotation[v]
        at_v = [dart.id for dart in d.darts if dart.vertex == v]
        if sorted(ring) != sorted(at_v) or len(ring) != 4:
            problems.append(
                f"rotation: ring of vertex {v} does not list its 4 darts")
            continue
        outs = sum(1 for i in ring if d.direction(i) == OUT)
        if outs != 2:
            problems.append(
                f"in/out balance: vertex {v} has {outs} out darts, needs 2")
            continue
        if any(d.direction(ring[i]) == d.direction(ring[(i + 1) % 4])
               for i in range(4)):
            problems.append(
                f"rotation alternation: vertex {v} does not alternate "
                "out/in around the vertex")
    if problems:
        return problems

    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nxt in (d.twin(cur), d.rotation_successor(cur)):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) != n_darts:
        problems.append("connectivity: the map is not connected")
        return problems

    face_list = _trace_faces(d)
    if len(face_list) != d.vertex_count + 2:
        problems.append(
            f"euler: face tracing gives {len(face_list)} faces, a sphere "
            f"map with V={d.vertex_count} must have {d.vertex_count + 2}")

    loops = d.loop_count()
    if loops and d.kind != "twist":
        problems.append(
            f"kind: {loops} loop(s) present but kind is {d.kind!r}; loops "
            "are admitted only for twists")
    if d.kind == "twist" and not loops:
        problems.append("kind: flagged twist but the diagram has no loops")
    if d.kind in ("knot", "link") and not loops:
        strands = component_count(d)
        expected = "knot" if strands == 1 else "link"
        if d.kind != expected:
            problems.append(
                f"kind: {strands} strand(s) traced but kind is {d.kind!r}")
    return problems


def is_valid(d: Diagram) -> bool:
    return not validate(d)


# ---------------------------------------------------------------------------
# Faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaceCensus:
    """Face-size census: counts[j] = number of faces bounded by j edges.

    The unbounded face (the sea) is always included.
    """

    counts: dict[int, int]
    largest: int
    sea_included: bool = True

    def total(self) -> int:
        return sum(self.counts.values())

    def size_sum(self) -> int:
        return sum(j * c for j, c in self.counts.items())


def _trace_faces(d: Diagram) -> list[tuple[int, ...]]:
    remaining = set(range(len(d.darts)))
    faces = []
    while remaining:
        start = min(remaining)
        trace = []
        cur = start
        while True:
            trace.append(cur)
            remaining.discard(cur)
            cur = d.next_in_face(cur)
            if cur == start:
                break
            if cur not in remaining:
                raise DiagramError("face tracing revisited a dart; the "
                                   "rotation system is inconsistent")
        faces.append(tuple(trace))
    return faces


def faces(d: Diagram) -> tuple[list[tuple[int, ...]], FaceCensus]:
    """All faces as cyclic dart sequences, plus the census.

    From a dart the boundary continues with the rotation successor of its
    twin; every dart lies on exactly one face.
    """
    face_list = _trace_faces(d)
    counts: dict[int, int] = {}
    for trace in face_list:
        counts[len(trace)] = counts.get(len(trace), 0) + 1
    return face_list, FaceCensus(counts, max(counts) if counts else 0)


def check_face_identity(census: FaceCensus) -> bool:
    """2*C_2 + C_3 == 8 + sum over j>=5 of (j-4)*C_j, for loop-free censuses.

    Censuses with one-edge faces are outside the identity's hypotheses and
    are rejected.
    """
    if census.counts.get(1, 0):
        raise ValueError("face identity needs a loop-free census (C_1 = 0)")
    lhs = 2 * census.counts.get(2, 0) + census.counts.get(3, 0)
    rhs = 8 + sum((j - 4) * c for j, c in census.counts.items() if j >= 5)
    return lhs == rhs


CCW = "CCW"
CW = "CW"


def face_orientations(d: Diagram) -> dict[int, str]:
    """Rotation sense of every face: CCW when the boundary follows the edge
    orientations, CW when it opposes them.

    Each boundary must be coherently oriented; a mixed face means the input
    violates the alternating orientation rule.  Faces sharing an edge always
    come out with opposite senses, which is the two-coloring.
    """
    face_list, _ = faces(d)
    out: dict[int, str] = {}
    for idx, trace in enumerate(face_list):
        dirs = {d.direction(dart) for dart in trace}
        if len(dirs) != 1:
            raise DiagramError(
                f"orientation rule broken: face {idx} mixes edge directions")
        out[idx] = CCW if dirs == {OUT} else CW
    return out


def face_of_dart(d: Diagram) -> dict[int, int]:
    """Map each dart id to the index of the face whose trace contains it."""
    mapping: dict[int, int] = {}
    for idx, trace in enumerate(_trace_faces(d)):
        for dart in trace:
            mapping[dart] = idx
    return mapping


# ---------------------------------------------------------------------------
# Strand components at map level (used to derive `kind`)
# ---------------------------------------------------------------------------

def component_count(d: Diagram) -> int:
    """Number of closed curves, by pairing each edge with the co-tail edge
    at its tail and the co-head edge at its head."""
    tails = d.edge_darts()
    edge_of_tail = {t: i for i, (t, _) in enumerate(tails)}

    def lane_mate(dart_id: int) -> int:
        ring = d.rotation[d.vertex_of(dart_id)]
        pos = ring.index(dart_id)
        return ring[(pos + 2) % 4]  # the opposite dart shares the lane

    count = 0
    unseen = set(range(len(tails)))
    while unseen:
        start = min(unseen)
        count += 1
        cur, via_tail = start, True
        while True:
            unseen.discard(cur)
            tail_dart, head_dart = tails[cur]
            mate = lane_mate(tail_dart if via_tail else head_dart)
            mate_tail = mate if d.direction(mate) == OUT else d.twin(mate)
            cur = edge_of_tail[mate_tail]
            via_tail = not via_tail
            if cur == start and via_tail:
                break
    return count


def derive_kind(d: Diagram) -> str:
    """knot / link / twist as dictated by the structure itself."""
    if d.loop_count():
        return "twist"
    return "knot" if component_count(d) == 1 else "link"


def with_kind(d: Diagram, kind: str | None = None) -> Diagram:
    """Copy of d carrying the given kind (derived from structure if None)."""
    return Diagram(kind or derive_kind(d), d.vertex_count, d.darts, d.rotation)


# ---------------------------------------------------------------------------
# Canonical form / isomorphism
# ---------------------------------------------------------------------------

def canonical_code(d: Diagram) -> tuple:
    """Label-independent code: minimum over all root darts of the BFS
    relabeling code.  Two connected diagrams are isomorphic as oriented
    sphere maps iff their codes are equal.  Mirror images are distinct.
    """
    n = len(d.darts)
    best: tuple | None = None
    for root in range(n):
        label = {root: 0}
        order = [root]
        for cur in order:
            for nxt in (d.twin(cur), d.rotation_successor(cur)):
                if nxt not in label:
                    label[nxt] = len(order)
                    order.append(nxt)
        code = tuple((label[d.twin(dart)],
                      label[d.rotation_successor(dart)],
                      d.direction(dart) == OUT)
                     for dart in order)
        if best is None or code < best:
            best = code
    assert best is not None
    return best


def isomorphic(a: Diagram, b: Diagram) -> bool:
    if a.vertex_count != b.vertex_count:
        return False
    return canonical_code(a) == canonical_code(b)


def mirror(d: Diagram) -> Diagram:
    """The reflected diagram: every rotation ring reversed.

    Mirrors share all invariants here (census, matrix, polynomial) but are
    kept distinct as embeddings; this flips between them.
    """
    return Diagram(d.kind, d.vertex_count, d.darts,
                   tuple(tuple(reversed(ring)) for ring in d.rotation))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_json_dict(d: Diagram) -> dict:
    return {
        "version": 1,
        "kind": d.kind,
        "vertex_count": d.vertex_count,
        "darts": [{"id": dart.id, "vertex": dart.vertex, "twin": dart.twin,
                   "dir": dart.direction} for dart in d.darts],
        "rotation": [list(ring) for ring in d.rotation],
    }


def to_json(d: Diagram, indent: int | None = None) -> str:
    return json.dumps(to_json_dict(d), indent=indent)


def from_json_dict(data: dict) -> Diagram:
    try:
        if data["version"] != 1:
            raise DiagramFormatError(
                f"unsupported diagram version {data['version']!r}")
        darts = tuple(Dart(int(item["id"]), int(item["vertex"]),
                           int(item["twin"]), str(item["dir"]))
                      for item in data["darts"])
        rotation = tuple(tuple(int(x) for x in ring)
                         for ring in data["rotation"])
        d = Diagram(str(data["kind"]), int(data["vertex_count"]),
                    darts, rotation)
    except DiagramFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramFormatError(f"malformed diagram document: {exc}") from exc
    if any(dart.direction not in (OUT, IN) for dart in d.darts):
        raise DiagramFormatError("dart dir must be 'out' or 'in'")
    return d


def from_json(text: str) -> Diagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DiagramFormatError("diagram document must be a JSON object")
    return from_json_dict(data)


def to_dot(d: Diagram, name: str = "altknot") -> str:
    """GraphViz digraph: one node per vertex, one arc per edge."""
    lines = [f"digraph {name} {{"]
    for v in range(d.vertex_count):
        lines.append(f"  {v};")
    for u, w in d.edges():
        lines.append(f"  {u} -> {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
