"""Addressing tiles of the dodecagrid by canonical words.

Crossing wall p of a tile appends generator p; crossing the same wall
twice cancels, and two crossings commute exactly when the faces share an
edge.  The shortlex-least reduced word is the tile's identity.
"""

from collections import Counter

from dodecagrid import topology as T

o = T.ORIGIN
print("origin:", o)

# Crossing contiguous walls commutes (four tiles close around an edge) ...
print("6 then 7:", T.normalize([6, 7]), "| 7 then 6:", T.normalize([7, 6]))
# ... but opposite walls do not: these are different tiles.
print("0 then 11:", T.normalize([0, 11]), "| 11 then 0:", T.normalize([11, 0]))

# Distance is just canonical word length, and agrees with breadth-first
# search.
t = T.normalize([5, 2, 5])
print("tile", t, "at distance", T.distance(o, t))
ball = T.ball(o, 3)
print("sphere sizes up to radius 3:", dict(Counter(ball.values())))

# Contact classification: face, edge-only, vertex-only.
for word in ([4], [6, 7], [6, 7, 11], [0, 11]):
    print(f"contact(e, {T.normalize(word)}):", T.contact(o, T.normalize(word)))

# Eight tiles close around a vertex (three pairwise-contiguous walls).
import itertools
around = {T.normalize(p) for n in range(4)
          for p in itertools.product((6, 7, 11), repeat=n)}
print("tiles around the 6-7-11 vertex:", len(around))

# Frames: the local face numbering of a tile, chirality-correct.  The
# default frame mirrors on odd tiles, which is what flips the running
# direction of return tracks laid under the plane.
print("default frame at e:", T.default_frame(o).map)
print("default frame at 5:", T.default_frame(T.normalize([5])).map)
f = T.frame_from_anchors(T.normalize([2, 5]), 9, 4)
print("frame anchored (9,4):", f.map)
