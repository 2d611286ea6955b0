"""Locomotives on tracks: line, arc, fixed switch, fork, controller, tunnel.

Each scenario builds a finite configuration, runs the sparse engine, and
prints the probe rows the published traces use.
"""

from dodecagrid import scenarios as S


def show(name, steps=None, rows=None):
    sc = S.scenario(name)
    print(f"--- {name} ---")
    _, trace = sc.run(steps)
    for t, row in enumerate(trace):
        for probe in (rows or sc.probes):
            print(f"t={t:2d} {probe:6s} {row[probe]}")
    print()


# A blue locomotive advances one element per step along a line of
# decorated cells, and around an arc (where every third element is entered
# through face 1 instead of face 5).
show("line")
show("arc")

# The fork turns one locomotive into two: one leaves along the plane, the
# other dips below it through an entry cell marked by a red neighbor.
show("fork")

# The controller sits under the guarded element: blank lets the
# locomotive through, blue kills it.  A locomotive on the below-plane
# access path flips the controller's color.
show("controller-pass")
show("controller-block")
show("control-change")

# The tunnel carries one track beneath another; the crossing track sits
# directly over the middle passage cell and never changes.
show("tunnel")

# Both branches of the fixed switch merge into the same exit rows.
for branch in "ab":
    sc = S.build_fixed_switch(branch)
    _, trace = sc.run()
    print(f"fixed switch, branch {branch}:",
          [row["exit"] for row in trace])
