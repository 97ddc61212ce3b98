"""Ternary phonological feature vectors generated from IPA transcriptions."""
from .errors import (
    DataFileError,
    InventoryMismatchError,
    ParseError,
    PhonovecError,
    UnknownFeatureError,
    UnmappedFeatureError,
    UnmappedModifierWarning,
    WordlistError,
    ZeroVectorError,
)
from .features import (
    FeatureInventory,
    FeatureVector,
    cosine_similarity,
    hamming_distance,
    new_zero_vector,
    set_feature,
    signature,
)
from .mapper import (
    HierarchyOrder,
    JointRule,
    MappingRule,
    MappingTable,
    apply_defaults,
    compose_cluster,
    vectorize,
    vectorize_click,
    vectorize_diphthong,
    vectorize_tone,
)
from .model import SoundVectors
from .sounds import (
    DescriptiveFeature,
    SoundCatalog,
    SoundClass,
    SoundDescriptor,
    name_of,
    parse_ipa,
    parse_name,
    split_complex,
)

__version__ = "0.1.0"
