from .dictionary import (
    AttributeDictionary,
    AttributeKind,
    build_colloc_dictionary,
    build_word_dictionary,
    record_attributes,
)
from .vectors import (
    CollocSet,
    SparseVector,
    Weighting,
    colloc_set,
    cosine,
    doc_vector,
    jaccard,
)
