"""The rule table: minimal forms, coherence, rotation-invariant lookup.

A rule is a 14-letter word: cell state, twelve neighbor states by local
face, new state.  Two rules are rotated images of each other exactly when
the lexicographic minimum of their rotated neighbor blocks coincides.
"""

from dodecagrid import rules as R

# The published worked example: the same track-entry rule written in two
# orientations shares one minimal form.
a = R.parse_rule("W:WWWWWBBWWBBW:B")
b = R.parse_rule("W:WWWWBWBWWBBW:B")
print("minimal form of a:", R.minimal_form(a))
print("minimal form of b:", R.minimal_form(b))

# The archive: 262 printed entries.  Seven re-list an earlier rule
# verbatim and one is a declared alias; there are no genuine collisions,
# and exactly one left-hand-side conflict between the withdrawn lone-G
# quiescence rule and the growth rule that replaces it.
archive = R.builtin_archive()
print("archive:", len(archive), "entries;", archive.report.summary())
print("conflict:", archive.report.conflicts)

# The executable table drops the withdrawn rule.
table = R.builtin_table()
print("executable:", len(table), "entries;",
      "deterministic" if not table.report.conflicts else "conflicted")

# The quiescence family: 39 classes of blank cells near sparse neighbors.
family = R.quiescence_family()
print("quiescence classes:", len(family))
lone_g = ["W"] * 12
lone_g[0] = "G"
print("lone-G neighborhood now maps to:", table.lookup("W", lone_g))

# Lookup is canonical: any rotation of a neighborhood answers alike.
entry_through_5 = list("WWWWWBBWWBBW")
entry_through_4 = list("WWWWBWBWWBBW")
print("enter through 5:", table.lookup("W", entry_through_5),
      "| through 4:", table.lookup("W", entry_through_4))
