"""Exception hierarchy shared by all phonovec modules."""


class PhonovecError(Exception):
    """Base class for every error raised by this package."""


class UnknownFeatureError(PhonovecError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown feature name: {self.name!r}"


class InventoryMismatchError(PhonovecError, ValueError):
    pass


class ZeroVectorError(PhonovecError, ValueError):
    pass


class ParseError(PhonovecError, ValueError):
    """Raised when a transcription or a sound name cannot be parsed.

    ``offset`` and ``char`` are set when the failure can be pinned to a
    single code point of the normalized input.
    """

    def __init__(self, message, source=None, offset=None, char=None):
        self.source = source
        self.offset = offset
        self.char = char
        super().__init__(message)


class UnmappedFeatureError(PhonovecError, KeyError):
    def __init__(self, value, domain, sound=None):
        self.value = value
        self.domain = domain
        self.sound = sound
        super().__init__(value)

    def __str__(self):
        where = f" in sound {self.sound!r}" if self.sound else ""
        return f"no mapping rule for feature value {self.value!r} (domain {self.domain!r}){where}"


class DataFileError(PhonovecError, ValueError):
    """A bundled or user-supplied data file is malformed."""


class WordlistError(PhonovecError, ValueError):
    pass


class UnmappedModifierWarning(UserWarning):
    """A parsed diacritic has no mapping rule and was ignored."""
