"""Combinatorics and symmetry group of a single labeled dodecahedron.

Faces are numbered 0..11: face 0 at the bottom, faces 1..5 around it in
cyclic order, faces 6..10 around the top face 11, with face 6 touching
faces 1 and 5.  A FaceMap is a permutation of the 12 face indices, stored
as a tuple ``images`` where ``images[i]`` is the image of face i.

The 60 orientation-preserving symmetries (rotations) are computed once as
the unique index-2 subgroup of the adjacency-automorphism group; the other
60 automorphisms are reflections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

FACES = range(12)

# Five neighbors of every face.  Face 6 shares sides with faces 1 and 5;
# the rest follows by walking around the two crowns.
_ADJ_LISTS = (
    (1, 2, 3, 4, 5),      # 0
    (0, 2, 5, 6, 7),      # 1
    (0, 1, 3, 7, 8),      # 2
    (0, 2, 4, 8, 9),      # 3
    (0, 3, 5, 9, 10),     # 4
    (0, 1, 4, 6, 10),     # 5
    (1, 5, 7, 10, 11),    # 6
    (1, 2, 6, 8, 11),     # 7
    (2, 3, 7, 9, 11),     # 8
    (3, 4, 8, 10, 11),    # 9
    (4, 5, 6, 9, 11),     # 10
    (6, 7, 8, 9, 10),     # 11
)

ADJACENT = tuple(frozenset(a) for a in _ADJ_LISTS)

OPPOSITE = (11, 9, 10, 6, 7, 8, 3, 4, 5, 1, 2, 0)

# Reflection in the plane through face pair (0,11) containing the opposite
# edges 1.5 and 8.9; fixes faces 0, 3, 6, 11.
MIRROR_MU = (0, 5, 4, 3, 2, 1, 6, 10, 9, 8, 7, 11)

IDENTITY = tuple(range(12))


class NotAdjacent(ValueError):
    """Raised when two faces required to share an edge do not."""


class NotASymmetry(ValueError):
    """Raised when a face map is not an adjacency-preserving bijection."""


def contiguous(i, j):
    """True when faces i and j share an edge."""
    return j in ADJACENT[i]


def compose(f, g):
    """Face map applying g first, then f."""
    return tuple(f[g[i]] for i in FACES)


def invert(f):
    inv = [0] * 12
    for i in FACES:
        inv[f[i]] = i
    return tuple(inv)


def is_face_map(f):
    """Adjacency-preserving bijection on 0..11."""
    if sorted(f) != list(FACES):
        return False
    return all(contiguous(f[i], f[j]) for i in FACES for j in ADJACENT[i])


@dataclass(frozen=True)
class AdjacencyTable:
    contiguous: tuple          # per face, its 5 neighbors in cyclic order
    opposite: tuple            # involution on faces
    edges: tuple               # 30 sorted face pairs
    vertices: tuple            # 20 sorted face triples


@dataclass(frozen=True)
class RotationRecord:
    map: tuple                 # FaceMap
    axis_kind: str             # "face" | "vertex" | "edge" | "identity"
    axis_id: int               # index within kind (-1 for identity)
    turn: int                  # angle index (0 for identity)


def _vertex_triples():
    return tuple(sorted(
        t for t in combinations(FACES, 3)
        if contiguous(t[0], t[1]) and contiguous(t[0], t[2])
        and contiguous(t[1], t[2])
    ))


def _cyclic_ring(face):
    """Neighbors of `face` ordered so consecutive ones share a vertex with it."""
    nbrs = list(ADJACENT[face])
    ring = [nbrs.pop()]
    while nbrs:
        for k, n in enumerate(nbrs):
            if contiguous(ring[-1], n):
                ring.append(nbrs.pop(k))
                break
        else:
            raise AssertionError("adjacency data is not a polyhedron")
    return tuple(ring)


@lru_cache(maxsize=None)
def adjacency():
    edges = tuple(sorted(
        (i, j) for i in FACES for j in ADJACENT[i] if i < j))
    rings = list(_cyclic_ring(f) for f in FACES)
    # Face 0's ring in the order fixed by the numbering convention.
    rings[0] = (1, 2, 3, 4, 5)
    return AdjacencyTable(
        contiguous=tuple(rings),
        opposite=OPPOSITE,
        edges=edges,
        vertices=_vertex_triples(),
    )


@lru_cache(maxsize=None)
def automorphisms():
    """All 120 adjacency-preserving bijections."""
    found = []
    for img0 in FACES:
        for img1 in ADJACENT[img0]:
            # third seed: a common neighbor of img0 and img1 (two choices)
            for img2 in ADJACENT[img0] & ADJACENT[img1]:
                f = {0: img0, 1: img1, 2: img2}
                if _extend(f) and is_face_map(tuple(f[i] for i in FACES)):
                    found.append(tuple(f[i] for i in FACES))
    uniq = sorted(set(found))
    assert len(uniq) == 120
    return tuple(uniq)


def _extend(f):
    # Propagate: the image of a face is forced once two adjacent mapped
    # neighbors are known (the remaining common neighbor of their images).
    changed = True
    while changed and len(f) < 12:
        changed = False
        for v in FACES:
            if v in f:
                continue
            known = [u for u in ADJACENT[v] if u in f]
            for a, b in combinations(known, 2):
                if not contiguous(a, b):
                    continue
                cands = set(ADJACENT[f[a]] & ADJACENT[f[b]]) - set(f.values())
                if len(cands) != 1:
                    return False
                f[v] = cands.pop()
                changed = True
                break
    return len(f) == 12


@lru_cache(maxsize=None)
def _rotation_set():
    """The unique index-2 subgroup of the automorphism group.

    It is generated by the squares of all automorphisms, which sidesteps
    any orientation convention.
    """
    auts = automorphisms()
    gens = {compose(a, a) for a in auts}
    group = set(gens) | {IDENTITY}
    frontier = list(group)
    while frontier:
        g = frontier.pop()
        for h in gens:
            gh = compose(g, h)
            if gh not in group:
                group.add(gh)
                frontier.append(gh)
    assert len(group) == 60
    return frozenset(group)


def _fixed_faces(m):
    return [i for i in FACES if m[i] == i]


def _classify(m, face_axes, vertex_axes, edge_axes):
    if m == IDENTITY:
        return RotationRecord(m, "identity", -1, 0)
    fixed = _fixed_faces(m)
    if fixed:
        axis = tuple(sorted(fixed))
        ring = adjacency().contiguous[axis[0]]
        turn = ring.index(m[ring[0]])
        return RotationRecord(m, "face", face_axes.index(axis), turn)
    fixed_v = [v for v in adjacency().vertices
               if tuple(sorted(m[i] for i in v)) == v]
    if fixed_v:
        # Turn 1 sends the least face of the invariant triple to the
        # greatest; this calibration matches the published worked example
        # for the image pair (9, 4).
        a, b, c = fixed_v[0]
        turn = 1 if m[a] == c else 2
        return RotationRecord(m, "vertex", vertex_axes.index(tuple(fixed_v)), turn)
    fixed_e = [e for e in adjacency().edges
               if tuple(sorted(m[i] for i in e)) == e]
    assert fixed_e, "rotation with no invariant face, vertex or edge"
    return RotationRecord(m, "edge", edge_axes.index(tuple(fixed_e)), 1)


@lru_cache(maxsize=None)
def rotation_group():
    """The 60 rotations, identity first, classified by axis."""
    table = adjacency()
    face_axes = sorted({tuple(sorted((f, OPPOSITE[f]))) for f in FACES})
    vertex_axes = sorted({
        tuple(sorted((v, tuple(sorted(OPPOSITE[i] for i in v)))))
        for v in table.vertices})
    edge_axes = sorted({
        tuple(sorted((e, tuple(sorted(OPPOSITE[i] for i in e)))))
        for e in table.edges})
    records = [_classify(m, face_axes, vertex_axes, edge_axes)
               for m in sorted(_rotation_set())]
    records.sort(key=lambda r: ({"identity": 0, "face": 1, "vertex": 2,
                                 "edge": 3}[r.axis_kind], r.axis_id, r.turn))
    counts = {}
    for r in records:
        counts[r.axis_kind] = counts.get(r.axis_kind, 0) + 1
    assert counts == {"identity": 1, "face": 24, "vertex": 20, "edge": 15}
    return tuple(records)


@lru_cache(maxsize=None)
def rotation_maps():
    """The 60 rotation permutations as a tuple (identity first)."""
    return tuple(r.map for r in rotation_group())


def mirror_mu():
    return MIRROR_MU


def rotation_from_image(img0, img1):
    """The unique rotation sending face 0 to img0 and face 1 to img1."""
    if not contiguous(img0, img1):
        raise NotAdjacent(f"faces {img0} and {img1} are not contiguous")
    for rec in rotation_group():
        if rec.map[0] == img0 and rec.map[1] == img1:
            return rec
    raise AssertionError("rotation group does not act transitively on flags")


def is_rotation(f):
    return tuple(f) in _rotation_set()


def is_chirality_correct(labeling):
    """True for rotations, False for reflections of the labeled solid."""
    f = tuple(labeling)
    if f in _rotation_set():
        return True
    if compose(f, MIRROR_MU) in _rotation_set():
        return False
    raise NotASymmetry(f"{labeling} is not a symmetry of the dodecahedron")
