"""Convenience wrapper pairing a sound catalog with a mapping table."""
from __future__ import annotations

import unicodedata

from .features import FeatureVector
from .mapper import MappingTable, vectorize
from .sounds import SoundCatalog, SoundDescriptor, name_of, parse_ipa, parse_name


class SoundVectors:
    """Parse and vectorize IPA tokens, caching results per normalized token.

    >>> sv = SoundVectors.default()
    >>> sv.name("p")
    'voiceless bilabial stop consonant'
    >>> sv.vector("p")["lab"]
    1
    """

    def __init__(self, catalog: SoundCatalog | None = None, table: MappingTable | None = None):
        self.catalog = catalog or SoundCatalog.default()
        self.table = table or MappingTable.default()
        self._vectors: dict[str, FeatureVector] = {}

    _default = None

    @classmethod
    def default(cls) -> "SoundVectors":
        if cls._default is None:
            cls._default = cls()
        return cls._default

    @property
    def inventory(self):
        return self.table.inventory

    def parse(self, token: str) -> SoundDescriptor:
        return parse_ipa(token, self.catalog)

    def parse_name(self, name: str) -> SoundDescriptor:
        return parse_name(name, self.catalog)

    def name(self, token: str) -> str:
        return name_of(self.parse(token))

    def vector(self, token: str) -> FeatureVector:
        key = unicodedata.normalize("NFD", token.strip())
        try:
            return self._vectors[key]
        except KeyError:
            v = self._vectors[key] = vectorize(self.parse(token), self.table)
            return v

    def vectorize_name(self, name: str) -> FeatureVector:
        return vectorize(self.parse_name(name), self.table)

    def __call__(self, token: str) -> FeatureVector:
        return self.vector(token)
