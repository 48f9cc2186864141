"""Diagram rewriting: bigon contraction, ribbon expansion, crossing
elimination and composition twisting.

All operations are pure: inputs are never mutated.  Vertex and dart ids of
results are assigned deterministically (new vertices appended, removed ids
compacted order-preservingly), so expanding and then contracting the new
bigon reproduces the original map exactly, dart for dart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (IN, OUT, Dart, Diagram, DiagramError, derive_kind,
                      faces, validate, _rebuild)

LANE_OUT = "lane_out"
LANE_IN = "lane_in"
LANES = (LANE_OUT, LANE_IN)


class SurgeryError(DiagramError):
    """Raised when a rewriting operation is not applicable."""


@dataclass(frozen=True)
class Unknot:
    """Result of eliminating the last crossing: a circle with no vertices.

    `circles` counts the vertexless closed curves the splice produced.
    """

    circles: int = 1

    def __str__(self) -> str:
        return f"<unknot: {self.circles} circle(s), no crossings>"


def _check_lane(lane: str) -> None:
    if lane not in LANES:
        raise SurgeryError(f"lane must be one of {LANES}, got {lane!r}")


def lane_preserving_face(d: Diagram, face_darts) -> str:
    """The expansion lane that keeps the given face's corners intact.

    Expanding a vertex splits the corners of the two faces whose boundary
    runs with the lane's darts: LANE_OUT grows the outgoing-coherent faces
    and keeps incoming-coherent corners, LANE_IN the other way around.
    """
    directions = {d.direction(dart) for dart in face_darts}
    if len(directions) != 1:
        raise SurgeryError("face is not coherently oriented")
    return LANE_OUT if directions == {IN} else LANE_IN


def lane_splitting_face(d: Diagram, face_darts) -> str:
    """The expansion lane that makes the given face one edge longer."""
    return LANE_IN if lane_preserving_face(d, face_darts) == LANE_OUT else LANE_OUT


# ---------------------------------------------------------------------------
# Ribbon expansion: vertex -> two vertices joined by an antiparallel bigon
# ---------------------------------------------------------------------------

def _expand(d: Diagram, vertex_id: int, lane: str) -> tuple[Diagram, int, tuple[int, int]]:
    """Expansion core; returns (diagram, new vertex id, new bigon's face darts)."""
    _check_lane(lane)
    if not 0 <= vertex_id < d.vertex_count:
        raise SurgeryError(f"no vertex {vertex_id}")
    ring = d.rotation[vertex_id]
    want = OUT if lane == LANE_OUT else IN
    if d.direction(ring[0]) == want:
        arcs = ((ring[0], ring[1]), (ring[2], ring[3]))
    else:
        arcs = ((ring[1], ring[2]), (ring[3], ring[0]))
    stay, move = (arcs if ring[0] in arcs[0] else (arcs[1], arcs[0]))

    old_v, new_v = vertex_id, d.vertex_count
    base = len(d.darts)
    # two new edges old_v -> new_v and new_v -> old_v
    t1, h1, t2, h2 = base, base + 1, base + 2, base + 3
    new_darts = list(d.darts)
    for dart_id in move:
        old = d.darts[dart_id]
        new_darts[dart_id] = Dart(old.id, new_v, old.twin, old.direction)
    new_darts += [Dart(t1, old_v, h1, OUT), Dart(h1, new_v, t1, IN),
                  Dart(t2, new_v, h2, OUT), Dart(h2, old_v, t2, IN)]

    if lane == LANE_OUT:
        # arcs run (out, in); appending (t, h) makes the new bigon the
        # incoming-coherent face {h2, h1}
        ring_old = (stay[0], stay[1], t1, h2)
        ring_new = (move[0], move[1], t2, h1)
        bigon = (h1, h2)
    else:
        ring_old = (stay[0], stay[1], h2, t1)
        ring_new = (move[0], move[1], h1, t2)
        bigon = (t1, t2)

    rotation = list(d.rotation)
    rotation[old_v] = ring_old
    rotation.append(ring_new)
    out = Diagram(d.kind, d.vertex_count + 1, tuple(new_darts), tuple(rotation))
    out = Diagram(derive_kind(out), out.vertex_count, out.darts, out.rotation)
    return out, new_v, bigon


def expand_vertex(d: Diagram, vertex_id: int, direction: str) -> Diagram:
    """Replace a vertex by two vertices joined through a new antiparallel
    bigon inserted along the chosen lane.

    Contracting the new face undoes the expansion: the same darts, twins
    and rotations come back (rotation tuples may restart elsewhere in
    their cycle).
    """
    out, _, _ = _expand(d, vertex_id, direction)
    return out


# ---------------------------------------------------------------------------
# Bigon contraction
# ---------------------------------------------------------------------------

def contract_bigon(d: Diagram, face_id: int) -> Diagram:
    """Destroy a two-edge face, merging its endpoint vertices into one.

    Orientations elsewhere are untouched.  Rejected when the face is not a
    bigon, or when its two edges close a circle on a single vertex (such a
    circle is a whole strand; contracting it would cut the strand off).
    """
    face_list, _ = faces(d)
    if not 0 <= face_id < len(face_list):
        raise SurgeryError(f"no face {face_id}")
    trace = face_list[face_id]
    if len(trace) != 2:
        raise SurgeryError(
            f"face {face_id} has {len(trace)} edges, contraction needs a bigon")
    p, q = trace
    v1, v2 = d.vertex_of(p), d.vertex_of(q)
    if v1 == v2:
        raise SurgeryError(
            "bigon closes a double-edge circle on one vertex; contracting "
            "it would disconnect that strand")

    keep, gone = min(v1, v2), max(v1, v2)
    removed = {p, q, d.twin(p), d.twin(q)}

    def remaining_arc(vertex: int) -> tuple[int, int]:
        ring = d.rotation[vertex]
        for i in range(4):
            if ring[i] in removed and ring[(i + 1) % 4] in removed:
                return ring[(i + 2) % 4], ring[(i + 3) % 4]
        raise SurgeryError("bigon darts are not adjacent in the rotation; "
                           "the diagram is not a valid alternating map")

    arc_keep = remaining_arc(keep)
    arc_gone = remaining_arc(gone)

    dart_fields: dict[int, tuple[int, int, str]] = {}
    for dart in d.darts:
        if dart.id in removed:
            continue
        vertex = dart.vertex
        if vertex == gone:
            vertex = keep
        elif vertex > gone:
            vertex -= 1
        dart_fields[dart.id] = (vertex, dart.twin, dart.direction)

    rotation_by_vertex: list[tuple[int, ...]] = []
    for v in range(d.vertex_count):
        if v == gone:
            continue
        if v == keep:
            rotation_by_vertex.append(arc_keep + arc_gone)
        else:
            rotation_by_vertex.append(d.rotation[v])

    out = _rebuild(d.kind, d.vertex_count - 1, dart_fields, rotation_by_vertex,
                   check=False)
    out = Diagram(derive_kind(out), out.vertex_count, out.darts, out.rotation)
    problems = validate(out)
    if problems:
        raise SurgeryError("contraction produced an invalid diagram: "
                           + "; ".join(problems))
    return out


# ---------------------------------------------------------------------------
# Crossing elimination
# ---------------------------------------------------------------------------

def eliminate_crossing(d: Diagram, vertex_id: int, direction: str) -> Diagram | Unknot:
    """Remove a vertex by splicing each incoming edge onto an outgoing edge.

    The lane picks between the two pairings: LANE_OUT joins every incoming
    dart to the outgoing dart that follows it in the rotation, LANE_IN to
    the one that precedes it.  Eliminating the last vertex yields an
    `Unknot` result rather than a diagram.
    """
    _check_lane(direction)
    if not 0 <= vertex_id < d.vertex_count:
        raise SurgeryError(f"no vertex {vertex_id}")
    ring = d.rotation[vertex_id]
    step = 1 if direction == LANE_OUT else -1
    pairing = {}
    for i, dart in enumerate(ring):
        if d.direction(dart) == IN:
            pairing[dart] = ring[(i + step) % 4]

    at_v = set(ring)
    splices: list[tuple[int, int]] = []
    consumed: set[int] = set()
    for h in pairing:
        tail = d.twin(h)
        if tail in at_v:
            continue  # loop edge; reached by chain-following below
        cur = h
        while True:
            consumed.add(cur)
            out_dart = pairing[cur]
            head = d.twin(out_dart)
            if head in at_v:
                cur = head
            else:
                break
        splices.append((tail, head))

    vanished = 0
    for h in pairing:
        if h in consumed or d.twin(h) not in at_v:
            continue
        # internal cycle: a closed curve with no vertex left on it
        cur = h
        while cur not in consumed:
            consumed.add(cur)
            nxt = d.twin(pairing[cur])
            cur = nxt
        vanished += 1

    if d.vertex_count == 1:
        return Unknot(circles=vanished)
    if vanished:
        raise SurgeryError(
            "splice closes a vertexless circle while other crossings remain; "
            "the result would be a split diagram")

    twin_patch = dict(splices)
    twin_patch.update({head: tail for tail, head in splices})

    dart_fields: dict[int, tuple[int, int, str]] = {}
    for dart in d.darts:
        if dart.vertex == vertex_id:
            continue
        vertex = dart.vertex - 1 if dart.vertex > vertex_id else dart.vertex
        twin = twin_patch.get(dart.id, dart.twin)
        dart_fields[dart.id] = (vertex, twin, dart.direction)

    rotation_by_vertex = [d.rotation[v] for v in range(d.vertex_count)
                          if v != vertex_id]
    out = _rebuild("twist", d.vertex_count - 1, dart_fields,
                   rotation_by_vertex, check=False)
    out = Diagram(derive_kind(out), out.vertex_count, out.darts, out.rotation)
    problems = validate(out)
    if problems:
        raise SurgeryError("elimination produced an invalid diagram: "
                           + "; ".join(problems))
    return out


# ---------------------------------------------------------------------------
# Composition with twisting
# ---------------------------------------------------------------------------

def compose_twist(d1: Diagram, edge1: int, d2: Diagram, edge2: int,
                  twists: int = 0) -> Diagram:
    """Connected sum through one edge of each diagram, with half-twists.

    Both chosen edges are cut and the four loose ends rejoined through a
    band carrying `twists` crossings (a ribbon of twist vertices).  With no
    twists this is the plain composition; successive twist counts form a
    family obeying the homogeneous three-term recurrence.
    """
    if twists < 0:
        raise SurgeryError("twist count must be >= 0")
    e1 = d1.edge_darts()
    e2 = d2.edge_darts()
    if not 0 <= edge1 < len(e1):
        raise SurgeryError(f"diagram 1 has no edge {edge1}")
    if not 0 <= edge2 < len(e2):
        raise SurgeryError(f"diagram 2 has no edge {edge2}")
    t1_dart, h1_dart = e1[edge1]
    t2_dart, h2_dart = e2[edge2]

    shift_v = d1.vertex_count
    shift_d = len(d1.darts)
    dart_fields: dict[int, tuple[int, int, str]] = {}
    for dart in d1.darts:
        dart_fields[dart.id] = (dart.vertex, dart.twin, dart.direction)
    for dart in d2.darts:
        dart_fields[dart.id + shift_d] = (dart.vertex + shift_v,
                                          dart.twin + shift_d, dart.direction)
    rotation = [d1.rotation[v] for v in range(d1.vertex_count)]
    rotation += [tuple(x + shift_d for x in d2.rotation[v])
                 for v in range(d2.vertex_count)]

    t2s, h2s = t2_dart + shift_d, h2_dart + shift_d

    if twists == 0:
        # cross join: tail of edge1 to head of edge2 and vice versa
        dart_fields[t1_dart] = (dart_fields[t1_dart][0], h2s, OUT)
        dart_fields[h2s] = (dart_fields[h2s][0], t1_dart, IN)
        dart_fields[t2s] = (dart_fields[t2s][0], h1_dart, OUT)
        dart_fields[h1_dart] = (dart_fields[h1_dart][0], t2s, IN)
        out = _rebuild("link", d1.vertex_count + d2.vertex_count,
                       dart_fields, rotation, check=False)
    else:
        # one twist vertex z; both strands cross there
        z = d1.vertex_count + d2.vertex_count
        base = shift_d + len(d2.darts)
        a1, b1, a2, b2 = base, base + 1, base + 2, base + 3
        # a1: head of edge1's tail-side strand at z, b1: tail toward h1
        dart_fields[t1_dart] = (dart_fields[t1_dart][0], a1, OUT)
        dart_fields[a1] = (z, t1_dart, IN)
        dart_fields[b1] = (z, h1_dart, OUT)
        dart_fields[h1_dart] = (dart_fields[h1_dart][0], b1, IN)
        dart_fields[t2s] = (dart_fields[t2s][0], a2, OUT)
        dart_fields[a2] = (z, t2s, IN)
        dart_fields[b2] = (z, h2s, OUT)
        dart_fields[h2s] = (dart_fields[h2s][0], b2, IN)
        rotation.append((a1, b1, a2, b2))
        out = _rebuild("link", z + 1, dart_fields, rotation, check=False)
        for _ in range(twists - 1):
            out, z, _ = _expand(out, z, LANE_IN)  # extend at the newest twist vertex

    out = Diagram(derive_kind(out), out.vertex_count, out.darts, out.rotation)
    problems = validate(out)
    if problems:
        raise SurgeryError("composition produced an invalid diagram: "
                           + "; ".join(problems))
    return out
