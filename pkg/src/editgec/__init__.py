"""Edit-tag based grammatical error correction toolkit.

Extracts character-level edit tags from parallel erroneous/corrected text,
compresses them into length-agnostic subword-level vocabularies, applies
predicted tags (iteratively, with optional punctuation cascading), ensembles
systems by edit-level majority vote, and evaluates with an M2-style scorer.
"""

from .align import char_align, refine_alignment, word_align
from .extract import apply_tags, extract_edits, segregate
from .kernels import BACKEND as KERNEL_BACKEND
from .score import ScoreReport, SpanEdit, m2_score, parse_m2, significance, span_edits
from .tags import (
    KEEP_TAG,
    CompressionSelector,
    TaggedSentence,
    TagUnit,
    build_compression_selector,
    compress,
    expand,
    parse,
    serialize,
)
from .taggers import InferenceConfig, LookupModel, ensemble, infer, oracle_tag
from .textcore import PunctSet, SubwordVocab, is_punct, tokenize
from .vocab import EditVocabulary, build_vocab, coverage_stats

__version__ = "0.1.0"
