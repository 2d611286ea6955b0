import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dodecagrid import geometry as G
from dodecagrid import topology as T


letters = st.integers(min_value=0, max_value=11)
words = st.lists(letters, max_size=12)


def test_normalize_examples():
    assert T.normalize([3, 3]) == T.ORIGIN
    assert T.normalize([6, 7]) == T.normalize([7, 6])
    assert T.normalize([0, 11]) != T.normalize([11, 0])
    assert str(T.normalize([5, 2, 5])) == "5.2.5"
    assert str(T.ORIGIN) == "e"
    assert T.parse_tile("5.2.5") == T.normalize([5, 2, 5])
    assert T.parse_tile("e") == T.ORIGIN
    with pytest.raises(ValueError):
        T.normalize([12])


@given(words)
def test_normalize_idempotent(w):
    t = T.normalize(w)
    assert T.normalize(t.word) == t


@given(words, st.randoms())
@settings(max_examples=200)
def test_normalize_confluent(w, rng):
    # normalizing any commutation-shuffled variant gives the same tile
    t = T.normalize(w)
    v = list(w)
    for _ in range(10):
        i = rng.randrange(len(v)) if v else 0
        if v and i + 1 < len(v) and T.COMMUTES[v[i]][v[i + 1]]:
            v[i], v[i + 1] = v[i + 1], v[i]
    assert T.normalize(v) == t


@given(words, letters)
def test_neighbor_involution(w, p):
    t = T.normalize(w)
    assert T.neighbor(T.neighbor(t, p), p) == t


def test_neighbors_distinct_and_not_gen1():
    for w in ((), (5,), (2, 5), (0, 4)):
        t = T.normalize(w)
        nbs = [T.neighbor(t, p) for p in range(12)]
        assert len(set(nbs)) == 12
        for a, b in itertools.combinations(nbs, 2):
            assert T.contact(a, b) != "generation1"


def test_four_tiles_around_an_edge():
    for i in range(12):
        for j in G.ADJACENT[i]:
            orbit = {T.ORIGIN, T.normalize([i]), T.normalize([j]),
                     T.normalize([i, j]), T.normalize([j, i])}
            assert len(orbit) == 4


def test_eight_tiles_around_a_vertex():
    for v in G.adjacency().vertices:
        tiles = {T.normalize(p) for n in range(4)
                 for p in itertools.product(v, repeat=n)}
        assert len(tiles) == 8


def test_contact_classification():
    o = T.ORIGIN
    assert T.contact(o, o) == "same"
    assert T.contact(o, T.normalize([4])) == "generation1"
    assert T.contact(o, T.normalize([6, 7])) == "generation2"
    assert T.contact(o, T.normalize([6, 7, 11])) == "generation3"
    assert T.contact(o, T.normalize([0, 11])) == "none"
    # relation between neighbours of tiles sharing their face-1 walls:
    # A's 6-neighbor and B's 7-neighbor see each other
    A, B = o, T.normalize([1])
    fB = T.frame_with(B, {0: 0, 1: 1})
    a6 = T.neighbor(A, 6)
    b7 = T.neighbor(B, fB[7])
    assert T.contact(a6, b7) == "generation1"


def test_distance_matches_bfs():
    ball = T.ball(T.ORIGIN, 3)
    for tile, d in ball.items():
        assert T.distance(T.ORIGIN, tile) == d
        assert len(tile.word) == d
    from collections import Counter
    sizes = Counter(ball.values())
    # word census oracle: canonical words of each length
    census1 = {T.normalize([i]) for i in range(12)}
    census2 = {T.normalize(p) for p in itertools.product(range(12), repeat=2)}
    census2 -= census1 | {T.ORIGIN}
    assert sizes[1] == len(census1) == 12
    assert sizes[2] == len(census2)


def test_all_nonentry_neighbors_are_farther():
    rng = random.Random(7)
    for _ in range(50):
        w = [rng.randrange(12) for _ in range(rng.randrange(1, 8))]
        t = T.normalize(w)
        k = T.distance(T.ORIGIN, t)
        closer = sum(
            1 for p in range(12)
            if T.distance(T.ORIGIN, T.neighbor(t, p)) == k - 1)
        farther = sum(
            1 for p in range(12)
            if T.distance(T.ORIGIN, T.neighbor(t, p)) == k + 1)
        assert closer >= 1 and closer + farther == 12


def test_default_frame_chirality():
    assert T.default_frame(T.ORIGIN).map == G.IDENTITY
    assert T.default_frame(T.normalize([5])).map == G.MIRROR_MU
    assert T.default_frame(T.normalize([6, 7])).map == G.IDENTITY
    for w in ((), (3,), (2, 5), (0, 1, 5)):
        t = T.normalize(w)
        f = T.default_frame(t).map
        ok = G.is_chirality_correct(f)
        assert ok == (t.parity == 0)


def test_frame_from_anchors():
    t = T.normalize([2, 5])
    f = T.frame_from_anchors(t, 0, 1)
    assert f[0] == 0 and f[1] == 1
    with pytest.raises(T.NotAdjacent):
        T.frame_from_anchors(t, 0, 11)
    # sixty distinct chirality-correct frames per tile
    frames = set()
    for p0 in range(12):
        for p1 in G.ADJACENT[p0]:
            frames.add(T.frame_from_anchors(t, p0, p1).map)
    assert len(frames) == 60
    # round trip: anchors read back off the frame
    f2 = T.frame_from_anchors(t, 9, 4)
    assert (f2[0], f2[1]) == (9, 4)
