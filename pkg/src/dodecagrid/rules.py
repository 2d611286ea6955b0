"""Rule representation, rotation action, canonical forms and the rule table.

A rule is a 14-letter word over the alphabet W, B, R, G, Y: the cell state,
the states of its twelve neighbors indexed by local face, and the new
state.  Rotating a rule permutes the neighbor block; the minimal form is
the lexicographically least neighbor block over the 60 rotations (letter
order W < B < R < G < Y) and two rules are images of each other exactly
when their minimal forms coincide.

The embedded table carries the 262 published entries: labels 1..261 plus
the alias "r19" (a relabeled image of rule 19).  Seven entries re-list an
earlier rule verbatim; a coherence violation is an equal-minimal-form pair
that is neither a verbatim re-listing nor the declared alias.  The one
archived left-hand-side conflict is rules 4/118 on the lone-G
neighborhood; the executable table drops rule 4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import geometry

ALPHABET = "WBRGY"
_ORDER = {c: i for i, c in enumerate(ALPHABET)}
QUIESCENT = "W"

_RULE_RE = re.compile(
    r"^(?:(?P<label>\w+)\s+)?(?P<here>[WBRGY]):(?P<around>[WBRGY]{12}):(?P<next>[WBRGY])$")


class ParseError(ValueError):
    pass


class MissingRule(KeyError):
    """A neighborhood outside the table's covered situations."""

    def __init__(self, here, around):
        self.here = here
        self.around = tuple(around)
        self.minimal = minimal_neighbors(here, around)
        super().__init__(f"{here}:{''.join(around)} (minimal {self.minimal})")


@dataclass(frozen=True)
class Rule:
    here: str
    around: tuple
    next: str
    label: object = None          # int, str tag, or None

    @property
    def word(self):
        return self.here + "".join(self.around) + self.next

    def text(self):
        return f"{self.here}:{''.join(self.around)}:{self.next}"

    def __str__(self):
        lab = f"{self.label} " if self.label is not None else ""
        return lab + self.text()


def parse_rule(text) -> Rule:
    m = _RULE_RE.match(text.strip())
    if m is None:
        raise ParseError(f"bad rule syntax: {text!r}")
    label = m.group("label")
    if label is not None and label.isdigit():
        label = int(label)
    return Rule(m.group("here"), tuple(m.group("around")), m.group("next"),
                label)


def rotate_rule(rule: Rule, rho) -> Rule:
    """Rotated image: the neighbor at face i moves to face rho(i)."""
    around = [None] * 12
    for i in range(12):
        around[rho[i]] = rule.around[i]
    return Rule(rule.here, tuple(around), rule.next, rule.label)


@lru_cache(maxsize=200_000)
def _min_neighbor_word(around: str) -> str:
    return min("".join(around[m[i]] for i in range(12))
               for m in _inverse_maps())


@lru_cache(maxsize=None)
def _inverse_maps():
    # around'[rho(i)] = around[i], so the rotated word read in face order
    # is around[rho^-1(i)]; precompute the inverses once.
    return tuple(geometry.invert(m) for m in geometry.rotation_maps())


def sort_key(word):
    return tuple(_ORDER[c] for c in word)


def minimal_neighbors(here, around) -> str:
    """Least neighbor block over the 60 rotations under W<B<R<G<Y."""
    return _least(tuple(around))


@lru_cache(maxsize=500_000)
def _least(around):
    best = None
    key = None
    for m in _inverse_maps():
        w = "".join(around[m[i]] for i in range(12))
        k = sort_key(w)
        if key is None or k < key:
            best, key = w, k
    return best


def minimal_form(rule: Rule) -> str:
    """Canonical 14-letter form `here:minblock:next`."""
    return f"{rule.here}:{_least(rule.around)}:{rule.next}"


def canonical_key(here, around):
    return here + _least(tuple(around))


@dataclass
class CoherenceReport:
    relistings: list = field(default_factory=list)   # same word, same class
    aliases: list = field(default_factory=list)      # declared alias pairs
    violations: list = field(default_factory=list)   # genuine collisions
    conflicts: list = field(default_factory=list)    # same key, next differs

    @property
    def coherent(self):
        return not self.violations

    def summary(self):
        return (f"{len(self.violations)} coherence violations, "
                f"{len(self.conflicts)} determinism conflicts "
                f"({len(self.relistings)} verbatim re-listings, "
                f"{len(self.aliases)} declared aliases)")


_ALIAS_OF = {"r19": 19}


class RuleTable:
    """A list of rules with a rotation-canonical lookup index."""

    def __init__(self, rules, name="table"):
        self.rules = list(rules)
        self.name = name
        self.index = {}
        self.report = self._check()

    def _check(self):
        rep = CoherenceReport()
        byform = {}
        for rule in self.rules:
            form = minimal_form(rule)
            prev = byform.get(form)
            if prev is not None:
                pair = (prev.label, rule.label)
                if prev.word == rule.word:
                    rep.relistings.append(pair)
                elif _ALIAS_OF.get(rule.label) == prev.label or \
                        _ALIAS_OF.get(prev.label) == rule.label:
                    rep.aliases.append(pair)
                else:
                    rep.violations.append(pair)
            else:
                byform[form] = rule
            key = rule.here + form.split(":")[1]
            hit = self.index.get(key)
            if hit is None:
                self.index[key] = rule
            elif hit.next != rule.next:
                rep.conflicts.append((hit.label, rule.label))
        return rep

    def __len__(self):
        return len(self.rules)

    def lookup(self, here, around):
        """Next state for a cell `here` reading neighbors `around`."""
        rule = self.index.get(here + _least(tuple(around)))
        if rule is None:
            raise MissingRule(here, around)
        return rule.next

    def by_label(self, label):
        for rule in self.rules:
            if rule.label == label:
                return rule
        raise KeyError(label)

    def without(self, *labels):
        drop = set(labels)
        return RuleTable([r for r in self.rules if r.label not in drop],
                         name=f"{self.name} minus {sorted(drop, key=str)}")


def parse_rule_file(text, name="file") -> RuleTable:
    rules = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rules.append(parse_rule(line))
        except ParseError as exc:
            raise ParseError(f"{name}:{lineno}: {exc}") from exc
    return RuleTable(rules, name=name)


@lru_cache(maxsize=None)
def builtin_archive() -> RuleTable:
    """All 262 published entries, rule 4 included."""
    text = resources.files("dodecagrid.data").joinpath("rules.txt").read_text()
    table = parse_rule_file(text, name="archive")
    if table.report.violations or len(table.report.conflicts) != 1:
        raise AssertionError(
            f"embedded archive failed validation: {table.report.summary()}")
    return table


@lru_cache(maxsize=None)
def builtin_table() -> RuleTable:
    """The executable table: the archive without rule 4."""
    table = builtin_archive().without(4)
    table.name = "executable"
    if table.report.conflicts:
        raise AssertionError("executable table is not deterministic")
    return table


def quiescence_family():
    """The 39 rule classes that freeze blank cells near sparse neighbors.

    Patterns: all-blank, a lone non-blank, a non-blank pair across an edge,
    and a non-blank triple around a vertex; new state always W.  The table
    ships every class except the lone-G one, whose slot is taken by the
    growth rule.
    """
    blank = ("W",) * 12
    rules = [Rule("W", blank, "W")]
    nonblank = "BRGY"
    for x in nonblank:
        rules.append(Rule("W", (x,) + blank[1:], "W"))
    for x in nonblank:
        for y in nonblank:
            rules.append(Rule("W", (x, y) + blank[2:], "W"))
            for z in nonblank:
                rules.append(Rule("W", (x, y, z) + blank[3:], "W"))
    seen = {}
    for r in rules:
        seen.setdefault(minimal_form(r), r)
    return list(seen.values())
