"""Parse IPA transcriptions and descriptive sound names into feature bundles.

A sound is described the way CLTS names it: an ordered list of feature
values ("voiceless", "bilabial", "stop") followed by its sound class
("consonant").  Parsing is driven entirely by the catalog tables in
``phonovec/data``: base graphemes, diacritics, and a value lexicon that
assigns each feature value to its domain.

Transcriptions are normalized to NFD first, so precomposed letters such as
``ã`` split into a base grapheme plus a combining diacritic.  Base graphemes
are matched longest-first; diacritics attach left to right.  When two
diacritics fill the same domain, the later one wins.
"""
from __future__ import annotations

import csv
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DataFileError, ParseError


class SoundClass(str, Enum):
    CONSONANT = "consonant"
    VOWEL = "vowel"
    TONE = "tone"
    DIPHTHONG = "diphthong"
    CLUSTER = "cluster"

    def __str__(self):
        return self.value


SIMPLE_CLASSES = (SoundClass.CONSONANT, SoundClass.VOWEL, SoundClass.TONE)
COMPLEX_CLASSES = (SoundClass.DIPHTHONG, SoundClass.CLUSTER)

REQUIRED_DOMAINS = {
    SoundClass.CONSONANT: ("phonation", "place", "manner"),
    SoundClass.VOWEL: ("roundedness", "height", "backness"),
    SoundClass.TONE: ("start",),
}

TONE_LEVELS = {1: "low", 2: "mid-low", 3: "mid", 4: "mid-high", 5: "high"}
TONE_DIGITS = {
    **{str(d): d for d in range(1, 6)},
    "¹": 1, "²": 2, "³": 3, "⁴": 4, "⁵": 5,
}
TIE_BARS = frozenset("͜͡")
FROM, TO = "from_", "to_"


@dataclass(frozen=True)
class DescriptiveFeature:
    value: str
    domain: str


@dataclass(frozen=True)
class SoundDescriptor:
    """A sound class plus its ordered descriptive features.

    Diphthongs and clusters carry their two constituents; the features of a
    complex sound are the constituents' features prefixed with ``from_`` and
    ``to_``.  ``source`` records the input and is ignored by equality.
    """

    sound_class: SoundClass
    features: tuple[DescriptiveFeature, ...]
    source: str = field(default="", compare=False)
    constituents: tuple["SoundDescriptor", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sound_class", SoundClass(self.sound_class))
        object.__setattr__(self, "features", tuple(self.features))
        object.__setattr__(self, "constituents", tuple(self.constituents))
        complex_ = self.sound_class in COMPLEX_CLASSES
        if complex_ and len(self.constituents) != 2:
            raise ValueError(f"a {self.sound_class} needs exactly two constituents")
        if not complex_ and self.constituents:
            raise ValueError(f"a {self.sound_class} cannot have constituents")
        seen = {}
        for f in self.features:
            if f.domain in seen and seen[f.domain] != f.value:
                raise ValueError(
                    f"conflicting values {seen[f.domain]!r} and {f.value!r} in domain {f.domain!r}"
                )
            seen[f.domain] = f.value

    @property
    def values(self) -> tuple[str, ...]:
        return tuple(f.value for f in self.features)

    def get(self, domain: str):
        for f in self.features:
            if f.domain == domain:
                return f.value
        return None

    @property
    def name(self) -> str:
        return name_of(self)


@dataclass(frozen=True)
class Diacritic:
    mark: str
    value: str
    domain: str
    side: str  # "prefix" or "suffix"


@dataclass(frozen=True)
class _Segment:
    base: str
    sound_class: SoundClass
    base_features: tuple[DescriptiveFeature, ...]
    modifiers: dict
    joined: bool
    start: int


class SoundCatalog:
    """Parser tables: base graphemes, diacritics and the value lexicon.

    ``lexicon`` maps each feature value to ``(domain, classes)``;
    diacritic values are allowed on every segmental class.
    """

    def __init__(self, base_sounds, diacritics, lexicon):
        self.base_sounds = dict(base_sounds)
        self.diacritics = {(d.mark, d.side): d for d in diacritics}
        self.lexicon = dict(lexicon)
        self.tone_digits = dict(TONE_DIGITS)
        self._modifier_order = {}
        for d in diacritics:
            self._modifier_order.setdefault(d.value, len(self._modifier_order))
        self._max_base = max(len(g) for g in self.base_sounds)
        self._validate()

    def _validate(self):
        for grapheme, (cls, feats) in self.base_sounds.items():
            domains = [f.domain for f in feats]
            if len(set(domains)) != len(domains):
                raise DataFileError(f"base sound {grapheme!r} repeats a domain")
            missing = set(REQUIRED_DOMAINS.get(cls, ())) - set(domains)
            if missing:
                raise DataFileError(
                    f"base sound {grapheme!r} lacks domain(s): {', '.join(sorted(missing))}"
                )
        for mark, _side in self.diacritics:
            if mark in self.base_sounds:
                raise DataFileError(f"mark {mark!r} is both a diacritic and a base grapheme")

    @classmethod
    def from_files(cls, sounds_path, diacritics_path, values_path) -> "SoundCatalog":
        lexicon = {}
        for row in _read_tsv(values_path, ("Class", "Domain", "Value")):
            value = row["Value"]
            sclass = SoundClass(row["Class"])
            if value in lexicon and lexicon[value][0] != row["Domain"]:
                raise DataFileError(f"{values_path}: value {value!r} listed under two domains")
            domain, classes = lexicon.get(value, (row["Domain"], frozenset()))
            lexicon[value] = (domain, classes | {sclass})

        diacritics = []
        for row in _read_tsv(diacritics_path, ("Mark", "Value", "Domain")):
            side = row.get("Side") or "suffix"
            if side not in ("prefix", "suffix"):
                raise DataFileError(f"{diacritics_path}: bad attachment side {side!r}")
            mark = _nfd(row["Mark"])
            value, domain = row["Value"], row["Domain"]
            if value in lexicon and lexicon[value][0] != domain:
                raise DataFileError(f"{diacritics_path}: value {value!r} clashes with lexicon")
            lexicon[value] = (domain, frozenset((SoundClass.CONSONANT, SoundClass.VOWEL)))
            diacritics.append(Diacritic(mark, value, domain, side))

        base = {}
        for row in _read_tsv(sounds_path, ("Grapheme", "Class", "Features")):
            grapheme = _nfd(row["Grapheme"])
            if grapheme in base:
                raise DataFileError(f"{sounds_path}: duplicate grapheme {grapheme!r}")
            sclass = SoundClass(row["Class"])
            feats = []
            for value in row["Features"].split():
                if value not in lexicon:
                    raise DataFileError(f"{sounds_path}: {grapheme!r} uses unknown value {value!r}")
                feats.append(DescriptiveFeature(value, lexicon[value][0]))
            base[grapheme] = (sclass, tuple(feats))
        return cls(base, diacritics, lexicon)

    @classmethod
    def default(cls) -> "SoundCatalog":
        return _default_catalog()

    def domain_of(self, value: str) -> str:
        return self.lexicon[value][0]

    def diacritic_marks(self, side=None):
        return sorted({m for (m, s) in self.diacritics if side in (None, s)})

    def modifier_rank(self, value: str) -> int:
        return self._modifier_order.get(value, len(self._modifier_order))

    def graphemes(self, sound_class=None):
        return [g for g, (c, _) in self.base_sounds.items() if sound_class in (None, c)]

    def match_base(self, s: str, pos: int):
        for length in range(min(self._max_base, len(s) - pos), 0, -1):
            cand = s[pos:pos + length]
            if cand in self.base_sounds:
                return cand
        return None


def _read_tsv(path, required):
    path = Path(path)
    try:
        with path.open(encoding="utf-8", newline="") as f:
            reader = csv.DictReader(f, delimiter="\t", quoting=csv.QUOTE_NONE)
            missing = [c for c in required if c not in (reader.fieldnames or ())]
            if missing:
                raise DataFileError(f"{path}: missing column(s) {', '.join(missing)}")
            rows = ({k: (v or "").strip() for k, v in row.items()} for row in reader)
            return [row for row in rows if any(row.values())]
    except UnicodeDecodeError as exc:
        raise DataFileError(f"{path}: not valid UTF-8 ({exc})") from None


def _data(name):
    return resources.files("phonovec") / "data" / name


@lru_cache(maxsize=None)
def _default_catalog():
    return SoundCatalog.from_files(_data("sounds.tsv"), _data("diacritics.tsv"), _data("values.tsv"))


def _nfd(s):
    return unicodedata.normalize("NFD", s)


def _describe_char(ch):
    return f"U+{ord(ch):04X} {unicodedata.name(ch, '<unnamed>')}"


def parse_ipa(s: str, catalog: SoundCatalog | None = None) -> SoundDescriptor:
    """Parse a single IPA sound (simple, diphthong, cluster or tone)."""
    catalog = catalog or SoundCatalog.default()
    if not isinstance(s, str):
        raise ParseError(f"expected a string, got {type(s).__name__}")
    text = _nfd(s.strip())
    if not text:
        raise ParseError("empty transcription", source=s)

    digits = [c in catalog.tone_digits for c in text]
    if all(digits):
        return _parse_tone(text, s, catalog)
    if any(digits):
        pos = digits.index(True)
        raise ParseError(
            f"tone digits mixed with segments in {s!r} at offset {pos}",
            source=s, offset=pos, char=text[pos],
        )

    segments = _segments(text, s, catalog)
    if len(segments) == 2 and segments[0].joined:
        merged = _merge_affricate(segments, catalog)
        if merged:
            segments = [merged]
    if len(segments) == 1:
        return _simple(segments[0], s, catalog)
    if len(segments) > 2:
        raise ParseError(f"{s!r} contains {len(segments)} segments; at most two are allowed", source=s)

    first, second = (_simple(seg, None, catalog) for seg in segments)
    classes = {first.sound_class, second.sound_class}
    if classes == {SoundClass.VOWEL}:
        if _base_part(first) == _base_part(second):
            raise ParseError(f"{s!r} has no vowel trajectory (identical nuclei)", source=s)
        return _complex(SoundClass.DIPHTHONG, first, second, s)
    if classes == {SoundClass.CONSONANT}:
        return _complex(SoundClass.CLUSTER, first, second, s)
    raise ParseError(
        f"{s!r} combines a {first.sound_class} and a {second.sound_class}; not a single sound",
        source=s,
    )


def _base_part(d):
    domains = REQUIRED_DOMAINS[d.sound_class]
    return tuple(d.get(dom) for dom in domains)


def _segments(text, source, catalog):
    segments = []
    pos, n = 0, len(text)
    while pos < n:
        start = pos
        modifiers = {}
        while pos < n and (text[pos], "prefix") in catalog.diacritics and not catalog.match_base(text, pos):
            dia = catalog.diacritics[(text[pos], "prefix")]
            modifiers[dia.domain] = dia.value
            pos += 1
        base = catalog.match_base(text, pos) if pos < n else None
        if base is None:
            at = min(pos, n - 1)
            what = _describe_char(text[at]) if pos < n else "end of input"
            raise ParseError(
                f"unknown grapheme {what} at offset {at} in {source!r}",
                source=source, offset=at, char=text[at] if pos < n else None,
            )
        sclass, feats = catalog.base_sounds[base]
        if sclass is SoundClass.TONE:
            raise ParseError(f"tone symbol inside a segmental transcription {source!r}", source=source)
        pos += len(base)
        joined = False
        while pos < n:
            ch = text[pos]
            if ch in TIE_BARS:
                joined = True
            elif (ch, "suffix") in catalog.diacritics:
                dia = catalog.diacritics[(ch, "suffix")]
                # later marks in the same domain replace earlier ones
                modifiers.pop(dia.domain, None)
                modifiers[dia.domain] = dia.value
            else:
                break
            pos += 1
        segments.append(_Segment(base, sclass, feats, modifiers, joined, start))
    if segments and segments[-1].joined:
        raise ParseError(f"dangling tie bar in {source!r}", source=source)
    return segments


def _merge_affricate(segments, catalog):
    first, second = segments
    combined = first.base + second.base
    if first.modifiers or combined not in catalog.base_sounds:
        return None
    sclass, feats = catalog.base_sounds[combined]
    return _Segment(combined, sclass, feats, second.modifiers, False, first.start)


def _simple(seg, source, catalog):
    mods = sorted(seg.modifiers.items(), key=lambda kv: catalog.modifier_rank(kv[1]))
    feats = tuple(DescriptiveFeature(v, d) for d, v in mods) + seg.base_features
    return SoundDescriptor(seg.sound_class, feats, source=source or seg.base)


def _complex(sclass, first, second, source):
    feats = tuple(DescriptiveFeature(FROM + f.value, FROM + f.domain) for f in first.features)
    feats += tuple(DescriptiveFeature(TO + f.value, TO + f.domain) for f in second.features)
    return SoundDescriptor(sclass, feats, source=source, constituents=(first, second))


def _parse_tone(text, source, catalog):
    levels = [catalog.tone_digits[c] for c in text]
    if len(levels) > 3:
        raise ParseError(f"tone {source!r} has {len(levels)} digits; at most three are allowed",
                         source=source)
    feats = []
    if len(levels) == 2:
        feats.append(_tone_direction(levels[0], levels[1]))
    elif len(levels) == 3:
        a, b, c = levels
        if (b - a) * (c - b) < 0:
            feats.append("contour")
        else:
            feats.append(_tone_direction(a, c))
    feats.append("from-" + TONE_LEVELS[levels[0]])
    if len(levels) == 3:
        feats.append("via-" + TONE_LEVELS[levels[1]])
    if len(levels) > 1:
        feats.append("to-" + TONE_LEVELS[levels[-1]])
    return SoundDescriptor(
        SoundClass.TONE,
        tuple(DescriptiveFeature(v, catalog.domain_of(v)) for v in feats),
        source=source,
    )


def _tone_direction(a, b):
    if b > a:
        return "rising"
    if b < a:
        return "falling"
    return "level"


def tone_levels(d: SoundDescriptor) -> list[int]:
    """Pitch levels (1-5) of a tone descriptor, in order."""
    by_name = {name: level for level, name in TONE_LEVELS.items()}
    out = []
    for prefix in ("from-", "via-", "to-"):
        for v in d.values:
            if v.startswith(prefix):
                out.append(by_name[v[len(prefix):]])
    return out


def parse_name(name: str, catalog: SoundCatalog | None = None) -> SoundDescriptor:
    """Parse a space-separated sound name such as ``voiceless bilabial stop consonant``."""
    catalog = catalog or SoundCatalog.default()
    tokens = name.split()
    if not tokens:
        raise ParseError("empty sound name", source=name)
    try:
        sclass = SoundClass(tokens[-1])
    except ValueError:
        raise ParseError(
            f"sound name {name!r} does not end in a sound class word "
            f"({', '.join(c.value for c in SoundClass)})",
            source=name,
        ) from None
    values = tokens[:-1]
    if sclass in COMPLEX_CLASSES:
        part_class = SoundClass.VOWEL if sclass is SoundClass.DIPHTHONG else SoundClass.CONSONANT
        parts = {FROM: [], TO: []}
        for v in values:
            prefix = FROM if v.startswith(FROM) else TO if v.startswith(TO) else None
            if prefix is None:
                raise ParseError(f"{sclass} feature {v!r} lacks a from_/to_ prefix", source=name)
            parts[prefix].append(v[len(prefix):])
        first = _descriptor_from_values(parts[FROM], part_class, catalog, name)
        second = _descriptor_from_values(parts[TO], part_class, catalog, name)
        feats = tuple(
            DescriptiveFeature(v, (FROM if v.startswith(FROM) else TO) + catalog.domain_of(v.split("_", 1)[1]))
            for v in values
        )
        return SoundDescriptor(sclass, feats, source=name, constituents=(first, second))
    return _descriptor_from_values(values, sclass, catalog, name)


def _descriptor_from_values(values, sclass, catalog, name):
    feats = []
    for v in values:
        if v not in catalog.lexicon:
            raise ParseError(f"unknown feature value {v!r} in {name!r}", source=name)
        domain, classes = catalog.lexicon[v]
        if sclass not in classes:
            raise ParseError(f"feature value {v!r} does not apply to a {sclass}", source=name)
        feats.append(DescriptiveFeature(v, domain))
    present = {f.domain for f in feats}
    missing = [d for d in REQUIRED_DOMAINS[sclass] if d not in present]
    if missing:
        raise ParseError(f"incomplete {sclass} name {name!r}: missing {', '.join(missing)}",
                         source=name)
    try:
        return SoundDescriptor(sclass, tuple(feats), source=name)
    except ValueError as exc:
        raise ParseError(f"{name!r}: {exc}", source=name) from None


def name_of(d: SoundDescriptor) -> str:
    return " ".join([*d.values, d.sound_class.value])


def split_complex(d: SoundDescriptor) -> tuple[SoundDescriptor, SoundDescriptor]:
    if d.sound_class not in COMPLEX_CLASSES:
        raise ValueError(f"{d.source or name_of(d)!r} is a {d.sound_class}, not a diphthong or cluster")
    return d.constituents[0], d.constituents[1]
