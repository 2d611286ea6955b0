"""Registers: four strands around a line, growth, increment, decrement, stop.

The content strand holds the register's value as its leading blank run;
the other three strands carry the increment return, the decrement return
and the stopping signal.  The growing end advances one cell every two
steps; the stopping wave chases it at speed one.
"""

from dodecagrid import engine as E
from dodecagrid import scenarios as S


def show(name, probes="all"):
    sc = S.scenario(name)
    print(f"--- {name} ---")
    _, trace = sc.run()
    for t, row in enumerate(trace):
        for probe in sc.probes:
            print(f"t={t:2d} {probe} {row[probe]}")
        print()


# Growth: green tips, blue cover, new tips; speed one half.
show("grow")

# Increment: a blue locomotive runs up the blank content, plants the
# yellow mark, converts the first blue cell, and returns on the red
# strand.  Content 5 -> 6.
show("inc")

# Decrement: the locomotive arrives red (converted on the approach cell),
# plants green, and the relay returns on the yellow strand.  Content
# 5 -> 4; at content 0 the register instead fires the failure-path
# locomotive.
show("dec")
show("dec0")

# Stop: a red signal on the stopping strand breeds a blank wave that
# catches the green tips; the survivors freeze into isolated blue cells.
sc = S.scenario("stop")
final, trace = sc.run()
for t, row in enumerate(trace):
    for probe in sc.probes:
        print(f"t={t:2d} {probe} {row[probe]}")
    print()
outcome = E.detect_cycle(final, S.run_table(), 5, on_missing="keep")
print("after the stop wave:", outcome.kind, "point reached")
