"""The dodecagrid as canonical words over twelve face-crossing generators.

A tile is addressed by the reduced word of wall crossings that reaches it
from a fixed origin tile.  Crossing the same wall twice cancels, and two
crossings commute exactly when their faces share an edge (the four tiles
around an edge close up).  Reduced words are geodesic and any two reduced
words for the same tile differ only by such swaps, so the shortlex-least
reduced word is a canonical tile id.

Panel types are global: the wall of type p in tile t leads to t·p, and the
shared wall has the same type seen from both sides.  A Frame maps the
local face numbering used by rules to panel types; it must be chirality
correct, which for a tile at an odd-length word means composing with the
mirror once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import geometry
from .geometry import ADJACENT, MIRROR_MU, IDENTITY, NotAdjacent

COMMUTES = tuple(tuple(j in ADJACENT[i] for j in range(12)) for i in range(12))


class _Memo(dict):
    def __missing__(self, key):
        val = self[key] = _canonical_word(key)
        return val


def _canonical_word(word):
    """Shortlex-least reduced word equivalent to `word` (a tuple)."""
    out = []
    for letter in word:
        _push(out, letter)
    return tuple(_lex_min(out))


def _push(out, letter):
    # Cancel against a matching earlier letter when everything in between
    # commutes with it; otherwise append.
    row = COMMUTES[letter]
    for i in range(len(out) - 1, -1, -1):
        if out[i] == letter:
            del out[i]
            return
        if not row[out[i]]:
            break
    out.append(letter)


def _lex_min(word):
    # Reduced words form one commutation class; emit the least available
    # letter first (a letter is available when all earlier letters commute
    # with it).
    word = list(word)
    out = []
    while word:
        best = None
        for i, letter in enumerate(word):
            if any(not COMMUTES[letter][word[j]] for j in range(i)):
                continue
            if best is None or letter < word[best]:
                best = i
        out.append(word.pop(best))
    return out


_MEMO = _Memo()


@dataclass(frozen=True, order=True)
class TileId:
    word: tuple

    def __str__(self):
        return ".".join(str(g) for g in self.word) if self.word else "e"

    @property
    def parity(self):
        return len(self.word) & 1


ORIGIN = TileId(())


def normalize(letters) -> TileId:
    """Canonical tile id for a crossing sequence."""
    word = tuple(letters)
    for g in word:
        if not 0 <= g <= 11:
            raise ValueError(f"generator out of range: {g}")
    return TileId(_MEMO[word])


def parse_tile(text) -> TileId:
    if text == "e":
        return ORIGIN
    return normalize(int(p) for p in text.split("."))


@lru_cache(maxsize=1_000_000)
def _neighbor_cached(word, panel):
    out = list(word)
    _push(out, panel)
    return TileId(tuple(_lex_min(out)))


def neighbor(tile: TileId, panel: int) -> TileId:
    return _neighbor_cached(tile.word, panel)


def inverse_word(word):
    return tuple(reversed(word))


def relative_word(a: TileId, b: TileId):
    """Canonical word of the move taking a to b."""
    return _MEMO[inverse_word(a.word) + b.word]


def distance(a: TileId, b: TileId) -> int:
    return len(relative_word(a, b))


def contact(a: TileId, b: TileId) -> str:
    """'same', 'generation1/2/3' (face/edge/vertex contact) or 'none'."""
    rel = relative_word(a, b)
    if len(rel) == 0:
        return "same"
    if len(rel) == 1:
        return "generation1"
    if len(rel) == 2 and COMMUTES[rel[0]][rel[1]]:
        return "generation2"
    if len(rel) == 3 and all(COMMUTES[x][y] for x, y in
                             ((rel[0], rel[1]), (rel[0], rel[2]),
                              (rel[1], rel[2]))):
        return "generation3"
    return "none"


@dataclass(frozen=True)
class Frame:
    """Chirality-correct map from local face index to panel type."""
    map: tuple

    def __getitem__(self, local):
        return self.map[local]


def default_frame(tile: TileId) -> Frame:
    """Identity panels on even tiles, mirrored panels on odd ones."""
    return Frame(IDENTITY if tile.parity == 0 else MIRROR_MU)


@lru_cache(maxsize=None)
def _proper_frames(parity):
    maps = geometry.rotation_maps()
    if parity:
        maps = tuple(geometry.compose(MIRROR_MU, m) for m in maps)
    return maps


def frame_with(tile: TileId, anchors: dict) -> Frame:
    """The unique chirality-correct frame fixing the given local->panel pairs."""
    hits = [m for m in _proper_frames(tile.parity)
            if all(m[loc] == panel for loc, panel in anchors.items())]
    if len(hits) != 1:
        raise NotAdjacent(
            f"anchors {anchors} fix {len(hits)} frames at parity {tile.parity}")
    return Frame(hits[0])


def frame_from_anchors(tile: TileId, panel_of_local0: int,
                       panel_of_local1: int) -> Frame:
    if not geometry.contiguous(panel_of_local0, panel_of_local1):
        raise NotAdjacent(
            f"panels {panel_of_local0},{panel_of_local1} are not contiguous")
    return frame_with(tile, {0: panel_of_local0, 1: panel_of_local1})


def ball(center: TileId, radius: int):
    """Breadth-first ball; the independent oracle for word-length distance."""
    seen = {center: 0}
    frontier = [center]
    for d in range(1, radius + 1):
        nxt = []
        for t in frontier:
            for p in range(12):
                n = neighbor(t, p)
                if n not in seen:
                    seen[n] = d
                    nxt.append(n)
        frontier = nxt
    return seen
