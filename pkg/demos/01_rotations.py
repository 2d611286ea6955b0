"""The sixty rotations of the labeled dodecahedron.

Walks through the symmetry layer: axis classification, the image-pair
lookup table, and what chirality-correctness means for face labelings.
"""

from collections import Counter

from dodecagrid import geometry as G

# The rotation group, computed once as the orientation-preserving half of
# the adjacency automorphisms.
group = G.rotation_group()
print("rotations:", len(group))
print("by axis:", dict(Counter(r.axis_kind for r in group)))

# Any rotation is pinned down by where it sends faces 0 and 1; that is the
# lookup the rule canonicalizer leans on.
rec = G.rotation_from_image(9, 4)
print(f"image (9,4): {rec.axis_kind} axis {rec.axis_id}, turn {rec.turn}")
print("image (0,1):", G.rotation_from_image(0, 1).axis_kind)

# The mirror through the opposite edges 1.5 / 8.9 is a symmetry but not a
# rotation: composing with it flips chirality.
mu = G.mirror_mu()
print("mirror fixes faces:", [f for f in range(12) if mu[f] == f])
print("mirror is a rotation:", G.is_rotation(mu))
print("identity chirality-correct:", G.is_chirality_correct(G.IDENTITY))
print("mirror chirality-correct:", G.is_chirality_correct(mu))

# Face-axis rotations generate everything in at most three steps.
faces = [r.map for r in group if r.axis_kind == "face"]
two = {G.compose(a, b) for a in faces for b in faces}
three = {G.compose(a, c) for a in faces for c in two} | two | set(faces)
print("generated by <=3 face rotations:", all(r.map in three or
                                              r.map == G.IDENTITY
                                              for r in group))
