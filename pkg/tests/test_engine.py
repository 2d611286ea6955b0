import random

import pytest

from dodecagrid import engine as E
from dodecagrid import rules as R
from dodecagrid import topology as T
from dodecagrid import scenarios as S


TAB = R.builtin_table()


def test_blank_stays_blank():
    c = E.Configuration.from_cells({})
    c2 = E.step(c, TAB)
    assert len(c2) == 0 and c2.generation == 1


def test_single_blue_cell_is_stable():
    c = E.Configuration.from_cells({T.ORIGIN: "B"})
    c2 = E.step(c, TAB)
    assert c2.cells == {T.ORIGIN: "B"}


def test_lone_green_buds():
    # every blank neighbor of a bare green cell turns blue; the green cell
    # itself has no covering rule and is kept
    c = E.Configuration.from_cells({T.ORIGIN: "G"})
    c2 = E.step(c, TAB, on_missing="keep")
    assert c2.state(T.ORIGIN) == "G"
    assert sum(1 for v in c2.cells.values() if v == "B") == 12


def test_missing_rule_error_and_keep():
    c = E.Configuration.from_cells({T.ORIGIN: "Y"})
    with pytest.raises(E.EngineError) as exc:
        E.step(c, TAB)
    assert exc.value.tile == T.ORIGIN
    log = []
    c2 = E.step(c, TAB, on_missing="keep", missing_log=log)
    assert c2.state(T.ORIGIN) == "Y"
    assert log and log[0][1] == "Y"


def test_determinism_and_report():
    sc = S.BUILDERS["line"]()
    a = E.step(sc.initial, TAB)
    b = E.step(sc.initial, TAB)
    assert a.signature() == b.signature()
    rep = E.step_report(sc.initial, a)
    assert rep.born == 1 and rep.died == 1 and rep.changed == 2


def test_quiescent_domain_is_tight():
    # support only ever grows into the face-adjacent frontier
    sc = S.BUILDERS["grow"]()
    config = sc.initial
    for _ in range(4):
        before = set(config.cells)
        frontier = set(before)
        for t in before:
            frontier.update(T.neighbor(t, p) for p in range(12))
        config = E.step(config, S.run_table(), on_missing="keep")
        assert set(config.cells) <= frontier


def test_detect_cycle_blank_and_stable():
    assert E.detect_cycle(E.Configuration.from_cells({}), TAB, 5).kind == "fixed"
    c = E.Configuration.from_cells({T.ORIGIN: "B"})
    out = E.detect_cycle(c, TAB, 5)
    assert out.kind == "fixed" and out.start == 0


def test_growth_scenario_stays_open():
    sc = S.BUILDERS["grow"]()
    out = E.detect_cycle(sc.initial, S.run_table(), 30, on_missing="keep")
    assert out.kind == "open"


def test_frame_metamorphic_small():
    sc = S.BUILDERS["line"]()
    assert E.frame_metamorphic_check(sc.initial, S.run_table(), 6, seed=3,
                                     on_missing="keep")
    assert E.frame_metamorphic_check(sc.initial, S.run_table(), 6, seed=4,
                                     on_missing="keep")


def test_random_frames_match_tile_parity():
    # frames on even tiles are rotations of the reference labeling, frames
    # on odd tiles are mirrored ones; both read the physical cell with the
    # correct handedness
    from dodecagrid import geometry as G
    frames = E.random_proper_frames(11)
    rng = random.Random(0)
    for _ in range(20):
        w = [rng.randrange(12) for _ in range(rng.randrange(5))]
        t = T.normalize(w)
        f = frames(t).map
        assert G.is_chirality_correct(f) == (t.parity == 0)
