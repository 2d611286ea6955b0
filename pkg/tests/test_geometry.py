import itertools

import pytest

from dodecagrid import geometry as G


def test_adjacency_table_shape():
    t = G.adjacency()
    assert len(t.edges) == 30
    assert len(t.vertices) == 20
    assert t.contiguous[0] == (1, 2, 3, 4, 5)
    # face 6 shares a side with faces 5 and 1
    assert 1 in G.ADJACENT[6] and 5 in G.ADJACENT[6]
    assert t.opposite == (11, 9, 10, 6, 7, 8, 3, 4, 5, 1, 2, 0)
    for v in t.vertices:
        assert all(G.contiguous(a, b) for a, b in itertools.combinations(v, 2))
    for f in range(12):
        assert G.OPPOSITE[f] not in G.ADJACENT[f]


def test_opposite_is_unique_edge_preserving_involution():
    # brute-force oracle: involutions on faces mapping every edge to an
    # edge, with no fixed face and no face mapped to a neighbor
    edges = {frozenset(e) for e in G.adjacency().edges}
    found = []
    faces = list(range(12))

    def extend(mapping):
        free = [f for f in faces if f not in mapping]
        if not free:
            found.append(dict(mapping))
            return
        a = free[0]
        for b in free[1:]:
            if b in G.ADJACENT[a]:
                continue
            mapping[a], mapping[b] = b, a
            if all(frozenset((mapping[x], mapping[y])) in edges
                   for x, y in edges if x in mapping and y in mapping):
                extend(mapping)
            del mapping[a], mapping[b]

    extend({})
    assert len(found) == 1
    assert tuple(found[0][f] for f in faces) == G.OPPOSITE


def test_rotation_group_counts_and_closure():
    group = G.rotation_maps()
    assert len(group) == 60
    kinds = {}
    for rec in G.rotation_group():
        kinds[rec.axis_kind] = kinds.get(rec.axis_kind, 0) + 1
    assert kinds == {"identity": 1, "face": 24, "vertex": 20, "edge": 15}
    gset = set(group)
    for a in group:
        for b in group:
            assert G.compose(a, b) in gset


def test_rotations_preserve_structure():
    for m in G.rotation_maps():
        for i in range(12):
            assert G.OPPOSITE[m[i]] == m[G.OPPOSITE[i]]
            for j in G.ADJACENT[i]:
                assert G.contiguous(m[i], m[j])


def test_rotation_from_image_bijection():
    seen = set()
    for img0 in range(12):
        for img1 in G.ADJACENT[img0]:
            rec = G.rotation_from_image(img0, img1)
            assert rec.map[0] == img0 and rec.map[1] == img1
            seen.add(rec.map)
    assert len(seen) == 60
    assert G.rotation_from_image(0, 1).axis_kind == "identity"
    rec = G.rotation_from_image(9, 4)
    assert rec.axis_kind == "vertex" and rec.turn == 2
    assert G.rotation_from_image(1, 0).axis_kind == "edge"
    with pytest.raises(G.NotAdjacent):
        G.rotation_from_image(0, 7)


def test_mirror():
    mu = G.mirror_mu()
    assert G.is_face_map(mu)
    assert G.compose(mu, mu) == G.IDENTITY
    assert not G.is_rotation(mu)
    assert mu[0] == 0 and mu[11] == 11 and mu[3] == 3 and mu[6] == 6
    assert mu[1] == 5 and mu[8] == 9


def test_chirality_partitions_automorphisms():
    auts = G.automorphisms()
    assert len(auts) == 120
    correct = [a for a in auts if G.is_chirality_correct(a)]
    assert len(correct) == 60
    assert G.is_chirality_correct(G.IDENTITY)
    assert not G.is_chirality_correct(G.MIRROR_MU)
    with pytest.raises(G.NotASymmetry):
        G.is_chirality_correct((1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11))


def test_face_rotations_generate():
    # every vertex- and edge-axis rotation is a product of at most three
    # face-axis rotations
    face_rots = [r.map for r in G.rotation_group() if r.axis_kind == "face"]
    reach = {G.IDENTITY} | set(face_rots)
    for a in face_rots:
        for b in face_rots:
            reach.add(G.compose(a, b))
    reach3 = set(reach)
    for c in list(reach):
        for a in face_rots:
            reach3.add(G.compose(a, c))
    for rec in G.rotation_group():
        assert rec.map in reach3
