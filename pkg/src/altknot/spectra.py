"""Adjacency matrices of diagrams and their strand/permutation structure.

The matrix of a diagram has entry (j, k) equal to the number of edges
oriented from vertex j to vertex k; rows and columns always sum to 2.
Closed curves of the underlying link are recovered from the matrix alone by
the alternating row/column walk, which also splits the matrix into a sum of
two permutation matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import OUT, Diagram

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AdjMatrix:
    """Square nonnegative integer matrix with all row and column sums 2."""

    rows: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "rows", tuple(tuple(int(v) for v in row) for row in self.rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def problems(self) -> list[str]:
        out = []
        if any(len(row) != self.n for row in self.rows):
            out.append("matrix is not square")
            return out
        if any(v < 0 for row in self.rows for v in row):
            out.append("negative entry")
        for i, row in enumerate(self.rows):
            if sum(row) != 2:
                out.append(f"row {i} sums to {sum(row)}, not 2")
        for j in range(self.n):
            s = sum(row[j] for row in self.rows)
            if s != 2:
                out.append(f"column {j} sums to {s}, not 2")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)

    def __str__(self) -> str:
        return self.to_text()


def parse_matrix(text: str) -> AdjMatrix:
    """Accepts rows of space-separated integers, or a JSON array of arrays."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        return AdjMatrix(tuple(tuple(int(v) for v in row) for row in data))
    rows = []
    for line in stripped.splitlines():
        line = line.strip()
        if line:
            rows.append(tuple(int(tok) for tok in line.split()))
    return AdjMatrix(tuple(rows))


def adjacency(d: Diagram) -> AdjMatrix:
    """Count directed edges between vertex pairs; loops land on the diagonal.

    The matrix determines the directed multigraph of the diagram but not
    its sphere embedding.
    """
    n = d.vertex_count
    rows = [[0] * n for _ in range(n)]
    for dart in d.darts:
        if dart.direction == OUT:
            rows[dart.vertex][d.vertex_of(dart.twin)] += 1
    return AdjMatrix(tuple(tuple(row) for row in rows))


# ---------------------------------------------------------------------------
# Strand tracing: the alternating row/column walk
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StrandDecomposition:
    """Partition of the edge multiset into the closed curves of the link.

    `edges` lists the matrix's edges as (row, col) cells in row-major order
    (a 2-entry contributes two consecutive ids).  Each component cycle
    alternates row moves and column moves; splitting a cycle at alternate
    positions gives its two permutation classes.
    """

    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    permutation_split: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def count(self) -> int:
        return len(self.components)


def _edge_list(m: AdjMatrix) -> list[tuple[int, int]]:
    edges = []
    for i, row in enumerate(m.rows):
        for j, v in enumerate(row):
            edges.extend([(i, j)] * v)
    return edges


def trace_strands(m: AdjMatrix) -> StrandDecomposition:
    """Walk the matrix row/column-alternately until each subgraph closes.

    Starting from the lexicographically smallest untraversed edge, step to
    the other edge in the same row, then the other edge in the same column,
    and so on; the closed cycles are the link components.  A diagram is a
    knot exactly when there is one component.
    """
    problems = m.problems()
    if problems:
        raise ValueError("not an adjacency matrix: " + "; ".join(problems))
    edges = _edge_list(m)
    row_slots: dict[int, list[int]] = {}
    col_slots: dict[int, list[int]] = {}
    for e, (i, j) in enumerate(edges):
        row_slots.setdefault(i, []).append(e)
        col_slots.setdefault(j, []).append(e)

    def row_mate(e: int) -> int:
        a, b = row_slots[edges[e][0]]
        return b if e == a else a

    def col_mate(e: int) -> int:
        a, b = col_slots[edges[e][1]]
        return b if e == a else a

    unseen = set(range(len(edges)))
    components = []
    splits = []
    while unseen:
        start = min(unseen)
        cycle = []
        cur, via_row = start, True
        while True:
            cycle.append(cur)
            unseen.discard(cur)
            cur = row_mate(cur) if via_row else col_mate(cur)
            via_row = not via_row
            if cur == start:
                break
        components.append(tuple(cycle))
        splits.append((tuple(cycle[0::2]), tuple(cycle[1::2])))
    return StrandDecomposition(tuple(edges), tuple(components), tuple(splits))


def _class_matrix(n: int, edges: tuple[tuple[int, int], ...],
                  members: tuple[int, ...]) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    for e in members:
        i, j = edges[e]
        rows[i][j] += 1
    return tuple(tuple(row) for row in rows)


def permutation_decompositions(m: AdjMatrix) -> list[tuple[Matrix, Matrix]]:
    """All canonical splittings of the matrix into two permutation matrices.

    Components flip independently; the pair count is canonicalized by
    sending the class holding the smallest edge of component 0 to the first
    matrix, and identical pairs (possible when a component's two classes
    coincide, e.g. a 2-entry circle) are deduplicated.  A knot therefore
    has exactly one decomposition.
    """
    dec = trace_strands(m)
    n = m.n
    class_pairs = []
    for cycle, (class_a, class_b) in zip(dec.components, dec.permutation_split):
        first = class_a if min(class_a) < min(class_b) else class_b
        second = class_b if first is class_a else class_a
        class_pairs.append((_class_matrix(n, dec.edges, first),
                            _class_matrix(n, dec.edges, second)))

    results: list[tuple[Matrix, Matrix]] = []
    seen = set()
    n_comp = len(class_pairs)
    for mask in range(2 ** max(n_comp - 1, 0)):
        p1 = [[0] * n for _ in range(n)]
        p2 = [[0] * n for _ in range(n)]
        for c, (first, second) in enumerate(class_pairs):
            # component 0 is pinned: its smallest edge's class goes to p1
            flip = c > 0 and (mask >> (c - 1)) & 1
            a, b = (second, first) if flip else (first, second)
            for i in range(n):
                for j in range(n):
                    p1[i][j] += a[i][j]
                    p2[i][j] += b[i][j]
        pair = (tuple(tuple(r) for r in p1), tuple(tuple(r) for r in p2))
        for p in pair:
            assert all(sum(row) == 1 for row in p), "classes must be permutations"
            assert all(sum(row[j] for row in p) == 1 for j in range(n))
        if pair not in seen:
            seen.add(pair)
            results.append(pair)
    return results


# ---------------------------------------------------------------------------
# Eigen-structure facts that stay in integer arithmetic
# ---------------------------------------------------------------------------

def all_ones_check(m: AdjMatrix) -> bool:
    """True iff the all-ones vector is a left and right eigenvector with
    eigenvalue 2, i.e. all row and column sums equal 2."""
    if any(len(row) != m.n for row in m.rows):
        return False
    return (all(sum(row) == 2 for row in m.rows)
            and all(sum(row[j] for row in m.rows) == 2 for j in range(m.n)))


def closed_path_count(m: AdjMatrix, k: int) -> int:
    """Number of closed directed paths of length k = trace(M^k), exactly."""
    if k < 1:
        raise ValueError("path length must be >= 1")
    n = m.n
    sparse = [[(j, v) for j, v in enumerate(row) if v] for row in m.rows]
    power = [list(row) for row in m.rows]
    for _ in range(k - 1):
        power = [[sum(v * power[t][j] for t, v in sparse[i]) for j in range(n)]
                 for i in range(n)]
    return sum(power[i][i] for i in range(n))
