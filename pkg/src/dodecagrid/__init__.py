"""Five-state rotation-invariant cellular automaton on the dodecagrid.

The dodecagrid is the tessellation {5,3,4} of hyperbolic 3-space by
right-angled dodecahedra.  This package provides the combinatorics of the
labeled dodecahedron and its 60 rotations, canonical word addressing of
tiles, the published 262-entry rule table with canonical-form lookup, a
sparse synchronous engine, and builders that reproduce the published
execution traces of the register-machine circuitry.
"""

from .geometry import (adjacency, rotation_group, rotation_from_image,
                       mirror_mu, is_chirality_correct, NotAdjacent,
                       NotASymmetry)
from .topology import (TileId, ORIGIN, normalize, parse_tile, neighbor,
                       contact, distance, default_frame, frame_from_anchors,
                       frame_with, Frame, ball)
from .rules import (Rule, RuleTable, parse_rule, parse_rule_file,
                    rotate_rule, minimal_form, quiescence_family,
                    builtin_archive, builtin_table, MissingRule, ParseError)
from .engine import (Configuration, step, run, detect_cycle,
                     probe_letters,
                     frame_metamorphic_check, EngineError, StepReport,
                     step_report)
from .scenarios import (Scenario, scenario, verify, BUILDERS, run_table,
                        build_register, CapacityError)

__version__ = "1.0.0"
