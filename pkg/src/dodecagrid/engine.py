"""Sparse synchronous evolution of finite-support configurations.

Only non-blank cells are stored.  One step evaluates the support plus the
blank tiles face-adjacent to it: any cell further out has twelve blank
neighbors, and the quiescent rule keeps it blank.  Neighbor states are
read in each tile's default frame; because lookups are canonical over the
60 rotations, any chirality-correct frame gives the same evolution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import topology
from .rules import QUIESCENT, RuleTable, MissingRule
from .topology import TileId, neighbor, default_frame


@dataclass(frozen=True)
class Configuration:
    cells: dict                      # TileId -> non-blank letter
    generation: int = 0

    @staticmethod
    def from_cells(items, generation=0):
        cells = {t: c for t, c in dict(items).items() if c != QUIESCENT}
        return Configuration(cells, generation)

    def state(self, tile):
        return self.cells.get(tile, QUIESCENT)

    def signature(self):
        """Canonical serialization, for hashing and equality of states."""
        return tuple(sorted((t.word, c) for t, c in self.cells.items()))

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class StepReport:
    changed: int
    born: int
    died: int
    support: int
    support_radius: int


class EngineError(RuntimeError):
    def __init__(self, tile, missing: MissingRule):
        self.tile = tile
        self.missing = missing
        super().__init__(f"no rule for tile {tile}: {missing}")


def _domain(config):
    seen = set(config.cells)
    frontier = []
    for tile in config.cells:
        frame = default_frame(tile).map
        for local in range(12):
            n = neighbor(tile, frame[local])
            if n not in seen:
                seen.add(n)
                frontier.append(n)
    return seen


def _neighborhood(config, tile, frame):
    return tuple(config.state(neighbor(tile, frame[local]))
                 for local in range(12))


def step(config: Configuration, table: RuleTable, frames=None,
         on_missing="error", missing_log=None) -> Configuration:
    """Synchronous update.  `frames` optionally overrides per-tile frames.

    The published table has no witness rules for passive scenery (for
    example a decoration cell of a red strand watching a locomotive pass
    its host), so `on_missing="keep"` leaves a cell unchanged when no rule
    matches, which is how the published traces behave; "error" raises.
    Missing neighborhoods are appended to `missing_log` when given.
    """
    nxt = {}
    for tile in _domain(config):
        frame = (frames(tile) if frames else default_frame(tile)).map
        here = config.state(tile)
        around = _neighborhood(config, tile, frame)
        try:
            new = table.lookup(here, around)
        except MissingRule as exc:
            if on_missing == "error":
                raise EngineError(tile, exc) from exc
            if missing_log is not None:
                missing_log.append((tile, here, exc.minimal))
            new = here
        if new != QUIESCENT:
            nxt[tile] = new
    return Configuration(nxt, config.generation + 1)


def step_report(before, after) -> StepReport:
    born = sum(1 for t in after.cells if t not in before.cells)
    died = sum(1 for t in before.cells if t not in after.cells)
    changed = born + died + sum(
        1 for t, c in after.cells.items()
        if t in before.cells and before.cells[t] != c)
    radius = max((len(t.word) for t in after.cells), default=0)
    return StepReport(changed, born, died, len(after), radius)


def run(config, table, steps, probes=None, frames=None,
        on_missing="error", missing_log=None):
    """Evolve `steps` times, recording probe letters at every time."""
    rows = [probe_rows(config, probes)] if probes else []
    for _ in range(steps):
        config = step(config, table, frames=frames,
                      on_missing=on_missing, missing_log=missing_log)
        if probes:
            rows.append(probe_rows(config, probes))
    return config, rows


def probe_letters(config, tiles):
    """One letter per probe tile, blank cells reading W."""
    return " ".join(config.state(t) for t in tiles)


def probe_rows(config, probes):
    return {name: probe_letters(config, tiles)
            for name, tiles in probes.items()}


@dataclass(frozen=True)
class CycleOutcome:
    kind: str                        # "fixed" | "cycle" | "open"
    start: int = -1
    period: int = 0


def detect_cycle(config, table, max_steps, on_missing="error") -> CycleOutcome:
    seen = {config.signature(): 0}
    for n in range(1, max_steps + 1):
        config = step(config, table, on_missing=on_missing)
        sig = config.signature()
        if sig in seen:
            start = seen[sig]
            period = n - start
            kind = "fixed" if period == 1 else "cycle"
            # a fixed point found at step n repeats the state reached at n-1
            return CycleOutcome(kind, start, period)
        seen[sig] = n
    return CycleOutcome("open")


def random_proper_frames(seed):
    """Per-tile random chirality-correct frames, deterministic per seed."""
    from . import geometry

    rng = random.Random(seed)
    maps = geometry.rotation_maps()
    cache = {}

    def frames(tile):
        frame = cache.get(tile)
        if frame is None:
            rho = rng.choice(maps)
            base = default_frame(tile).map
            frame = topology.Frame(tuple(base[rho[i]] for i in range(12)))
            cache[tile] = frame
        return frame

    return frames


def frame_metamorphic_check(config, table, steps, seed=0, on_missing="error"):
    """Re-run with randomized frames; colored-tile maps must agree stepwise."""
    frames = random_proper_frames(seed)
    a, b = config, config
    for _ in range(steps):
        a = step(a, table, on_missing=on_missing)
        b = step(b, table, frames=frames, on_missing=on_missing)
        if a.signature() != b.signature():
            return False
    return True
