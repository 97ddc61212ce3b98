"""Load CLDF-style segmented wordlists from tab-separated files."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from .errors import WordlistError

REQUIRED_COLUMNS = ("ID", "Language_ID", "Parameter_ID", "Form", "Segments")
# morpheme and word boundary markers used in Lexibank segment strings
BOUNDARY_MARKERS = frozenset({"+", "_", "#"})


@dataclass(frozen=True)
class Form:
    id: str
    language: str
    concept: str
    segments: tuple[str, ...]
    form: str = ""

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        if not self.segments:
            raise ValueError(f"form {self.id!r} has no segments")
        for tok in self.segments:
            if not tok or any(c.isspace() for c in tok):
                raise ValueError(f"form {self.id!r} has an empty or whitespace token {tok!r}")


@dataclass(frozen=True)
class Wordlist:
    forms: tuple[Form, ...]
    languages: dict[str, tuple[Form, ...]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        index: dict[str, list[Form]] = {}
        for form in self.forms:
            index.setdefault(form.language, []).append(form)
        object.__setattr__(self, "languages", {k: tuple(v) for k, v in index.items()})

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def forms_of(self, language: str) -> tuple[Form, ...]:
        if not language:
            raise WordlistError("language id must not be empty")
        try:
            return self.languages[language]
        except KeyError:
            known = ", ".join(sorted(self.languages)) or "none"
            raise WordlistError(f"unknown language {language!r} (known: {known})") from None


def load_wordlist(path) -> Wordlist:
    """Read a tab-separated wordlist with a header row.

    ``Segments`` holds space-separated IPA tokens.  Errors name the file
    and the 1-based line number.
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise WordlistError(f"cannot read {path}: {exc.strerror}") from None
    lines = []
    for lineno, chunk in enumerate(raw.splitlines(), start=1):
        try:
            lines.append(chunk.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise WordlistError(f"{path}:{lineno}: malformed UTF-8 ({exc.reason})") from None
    if lines and lines[0].startswith("﻿"):
        lines[0] = lines[0][1:]
    reader = csv.reader(lines, delimiter="\t", quoting=csv.QUOTE_NONE)
    try:
        header = next(reader)
    except StopIteration:
        raise WordlistError(f"{path}: empty file") from None
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise WordlistError(f"{path}: missing column(s): {', '.join(missing)}")
    col = {name: header.index(name) for name in REQUIRED_COLUMNS}

    forms = []
    for lineno, row in enumerate(reader, start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) < len(header):
            raise WordlistError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
        segments = row[col["Segments"]].split()
        if not segments:
            raise WordlistError(f"{path}:{lineno}: empty Segments")
        try:
            forms.append(Form(
                id=row[col["ID"]],
                language=row[col["Language_ID"]],
                concept=row[col["Parameter_ID"]],
                segments=tuple(segments),
                form=row[col["Form"]],
            ))
        except ValueError as exc:
            raise WordlistError(f"{path}:{lineno}: {exc}") from None
    return Wordlist(tuple(forms))


def inventory(w: Wordlist, language: str) -> set[str]:
    """Distinct sound tokens of one language, boundary markers excluded."""
    return {tok for form in w.forms_of(language) for tok in form.segments
            if tok not in BOUNDARY_MARKERS}
