"""Hierarchical mapping of descriptive features onto ternary vectors.

Vectorizing starts from a zero vector. The sound class is applied first,
and its rule doubles as the default assignments. The descriptor's features
follow, ordered from least to most specific. Every rule overwrites earlier
writes, so a diacritic such as "devoiced" wins over the base "voiced".
Joint rules, keyed by combinations of feature values, fire last.

Complex sounds take dedicated paths:

* Clusters are the union of their constituents' positive features.
* Diphthongs inherit the vowel features of their first element and add
  trajectory features from joint rules.
* Clicks are vectorized as the analogous pulmonic stop plus ``velaric``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DataFileError, InventoryMismatchError, UnmappedFeatureError, UnmappedModifierWarning
from .features import MINUS, PLUS, ZERO, FeatureInventory, FeatureVector, new_zero_vector
from .sounds import FROM, TO, DescriptiveFeature, SoundClass, SoundDescriptor, _read_tsv

CLASS_DOMAIN = "type"
TONE_FEATURES = ("hitone", "hireg", "loreg", "contour", "rising", "falling")
TRAJECTORY_FEATURES = (
    "backshift", "frontshift", "opening", "closing", "centering", "longdistance", "secondrounded",
)


@dataclass(frozen=True)
class MappingRule:
    value: str
    domain: str
    assignments: tuple[tuple[str, int], ...]

    @property
    def key(self):
        return (self.value, self.domain)


@dataclass(frozen=True)
class JointRule:
    key: frozenset[str]
    assignments: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if len(self.key) < 2:
            raise ValueError("a joint rule needs at least two feature values")


@dataclass(frozen=True)
class HierarchyOrder:
    """Domains from least to most specific; ``modifiers`` are diacritic domains."""

    domains: tuple[str, ...]
    modifiers: frozenset[str] = frozenset()

    def __post_init__(self):
        if len(set(self.domains)) != len(self.domains):
            raise ValueError("hierarchy lists a domain twice")
        if not self.domains or self.domains[0] != CLASS_DOMAIN:
            raise ValueError(f"hierarchy must start with the {CLASS_DOMAIN!r} domain")
        ranks = [self.domains.index(m) for m in self.modifiers]
        base = [i for i, d in enumerate(self.domains) if d not in self.modifiers]
        if ranks and base and min(ranks) < max(base):
            raise ValueError("modifier domains must come after all base domains")

    def rank(self, domain: str) -> int:
        try:
            return self.domains.index(domain)
        except ValueError:
            return len(self.domains)

    def __contains__(self, domain):
        return domain in self.domains


class MappingTable:
    """Rule set for one feature inventory. Immutable once constructed."""

    def __init__(self, inventory, rules, joint_rules, hierarchy):
        self.inventory = inventory
        self.rules = {}
        for rule in rules:
            if rule.key in self.rules:
                raise DataFileError(f"duplicate rule for {rule.value!r} in domain {rule.domain!r}")
            self.rules[rule.key] = rule
        self.joint_rules = tuple(joint_rules)
        self.hierarchy = hierarchy
        self._rank = {d: i for i, d in enumerate(hierarchy.domains)}
        self._positions = {}
        self._validate()

    def _validate(self):
        for rule in [*self.rules.values(), *self.joint_rules]:
            for name, _ in rule.assignments:
                if name not in self.inventory:
                    raise DataFileError(f"rule {rule.key} assigns unknown feature {name!r}")
        for value, domain in self.rules:
            if domain not in self.hierarchy:
                raise DataFileError(f"domain {domain!r} of rule {value!r} is missing from the hierarchy")

    @classmethod
    def from_files(cls, rules_path, joint_path, hierarchy_path, inventory=None) -> "MappingTable":
        inventory = inventory or FeatureInventory.default()
        rules = [
            MappingRule(row["Value"], row["Domain"], _parse_assignments(row["Assignments"], rules_path))
            for row in _read_tsv(rules_path, ("Domain", "Value", "Assignments"))
        ]
        joint = [
            JointRule(frozenset(row["Values"].split()), _parse_assignments(row["Assignments"], joint_path))
            for row in _read_tsv(joint_path, ("Values", "Assignments"))
        ]
        rows = _read_tsv(hierarchy_path, ("Domain",))
        try:
            hierarchy = HierarchyOrder(
                tuple(r["Domain"] for r in rows),
                frozenset(r["Domain"] for r in rows if r.get("Kind") == "modifier"),
            )
        except ValueError as exc:
            raise DataFileError(f"{hierarchy_path}: {exc}") from None
        return cls(inventory, rules, joint, hierarchy)

    @classmethod
    def default(cls) -> "MappingTable":
        return _default_table()

    def rank(self, domain):
        return self._rank.get(domain, len(self._rank))

    def rule_for(self, feature: DescriptiveFeature):
        return self.rules.get((feature.value, feature.domain))

    def position(self, name):
        try:
            return self._positions[name]
        except KeyError:
            pos = self._positions[name] = self.inventory.position(name)
            return pos


def _parse_assignments(text, path):
    out = []
    for token in text.replace("−", "-").split(","):
        token = token.strip()
        if not token:
            continue
        if token[0] not in "+-" or len(token) < 2:
            raise DataFileError(f"{path}: malformed assignment {token!r}")
        out.append((token[1:], PLUS if token[0] == "+" else MINUS))
    return tuple(out)


def _data(name):
    return resources.files("phonovec") / "data" / name


@lru_cache(maxsize=None)
def _default_table():
    return MappingTable.from_files(_data("rules.tsv"), _data("joint_rules.tsv"), _data("hierarchy.tsv"))


def _assign(values, table, assignments):
    for name, val in assignments:
        values[table.position(name)] = val


def _label(d):
    return d.source or " ".join([*d.values, d.sound_class.value])


def apply_defaults(d: SoundDescriptor, t: MappingTable, v: FeatureVector | None = None) -> FeatureVector:
    """Apply the sound-class rule, which sets every feature applicable to the class."""
    v = v or new_zero_vector(t.inventory)
    rule = t.rules.get((d.sound_class.value, CLASS_DOMAIN))
    if rule is None:
        raise UnmappedFeatureError(d.sound_class.value, CLASS_DOMAIN, _label(d))
    values = list(v.values)
    _assign(values, t, rule.assignments)
    return FeatureVector(tuple(values), t.inventory)


def _apply_rules(d, t, values, features, lenient_prefixes=()):
    ordered = sorted(features, key=lambda f: t.rank(f.domain))
    for feature in ordered:
        rule = t.rule_for(feature)
        if rule is not None:
            _assign(values, t, rule.assignments)
        elif feature.domain.startswith(lenient_prefixes):
            continue
        elif feature.domain in t.hierarchy.modifiers:
            warnings.warn(
                f"no mapping rule for modifier {feature.value!r} in {_label(d)!r}; ignored",
                UnmappedModifierWarning,
                stacklevel=4,
            )
        else:
            raise UnmappedFeatureError(feature.value, feature.domain, _label(d))
    present = {f.value for f in features} | {d.sound_class.value}
    for joint in t.joint_rules:
        if joint.key <= present:
            _assign(values, t, joint.assignments)


def _vectorize_simple(d, t):
    values = list(apply_defaults(d, t).values)
    _apply_rules(d, t, values, d.features)
    return FeatureVector(tuple(values), t.inventory)


def is_click(d: SoundDescriptor) -> bool:
    return d.sound_class is SoundClass.CONSONANT and d.get("manner") == "click"


def vectorize(d: SoundDescriptor, t: MappingTable | None = None) -> FeatureVector:
    t = t or MappingTable.default()
    if d.sound_class is SoundClass.TONE:
        return vectorize_tone(d, t)
    if d.sound_class is SoundClass.DIPHTHONG:
        return vectorize_diphthong(d, t)
    if d.sound_class is SoundClass.CLUSTER:
        first, second = d.constituents
        return compose_cluster(vectorize(first, t), vectorize(second, t))
    if is_click(d):
        return vectorize_click(d, t)
    return _vectorize_simple(d, t)


def vectorize_tone(d: SoundDescriptor, t: MappingTable | None = None) -> FeatureVector:
    t = t or MappingTable.default()
    if d.sound_class is not SoundClass.TONE:
        raise ValueError(f"{_label(d)!r} is a {d.sound_class}, not a tone")
    v = _vectorize_simple(d, t)
    for name in TONE_FEATURES:
        if name in t.inventory and v[name] == ZERO:
            raise ValueError(f"tone {_label(d)!r} left {name} unset; check the tone rules")
    return v


def vectorize_diphthong(d: SoundDescriptor, t: MappingTable | None = None) -> FeatureVector:
    t = t or MappingTable.default()
    if d.sound_class is not SoundClass.DIPHTHONG:
        raise ValueError(f"{_label(d)!r} is a {d.sound_class}, not a diphthong")
    first = d.constituents[0]
    values = list(apply_defaults(d, t, vectorize(first, t)).values)
    # from_/to_ values without a single rule only feed the joint rules
    _apply_rules(d, t, values, d.features, lenient_prefixes=(FROM, TO))
    return FeatureVector(tuple(values), t.inventory)


def vectorize_click(d: SoundDescriptor, t: MappingTable | None = None) -> FeatureVector:
    t = t or MappingTable.default()
    if not is_click(d):
        raise ValueError(f"{_label(d)!r} is not a click")
    stop = DescriptiveFeature("stop", "manner")
    feats = tuple(stop if f.domain == "manner" else f for f in d.features)
    pulmonic = SoundDescriptor(d.sound_class, feats, source=d.source)
    values = list(_vectorize_simple(pulmonic, t).values)
    values[t.position("velaric")] = PLUS
    return FeatureVector(tuple(values), t.inventory)


def compose_cluster(a: FeatureVector, b: FeatureVector) -> FeatureVector:
    """Union of positive features; otherwise -1 if either side is -1, else 0."""
    if a.inventory.features != b.inventory.features:
        raise InventoryMismatchError("cluster constituents use different feature inventories")
    out = []
    for x, y in zip(a.values, b.values):
        if x == PLUS or y == PLUS:
            out.append(PLUS)
        elif x == MINUS or y == MINUS:
            out.append(MINUS)
        else:
            out.append(ZERO)
    return FeatureVector(tuple(out), a.inventory)
