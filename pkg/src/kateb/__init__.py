"""kateb: a self-hostable Arabic (MSA) writing practice service.

Leveled prompts, per-token error detection with suggested corrections,
CEFR estimation, revision tracking, and an exportable annotated corpus.
"""

from .editscript import (
    CharEdit,
    EditGroup,
    EditScript,
    TokenAlignment,
    align_tokens,
    apply_script,
    build_script,
    char_edit_script,
    derive_tag,
)
from .errors import (
    AlreadySeededError,
    BackendUnavailableError,
    ConfigError,
    KatebError,
    MalformedScriptError,
    NotFoundError,
    ParseError,
    UnscorableInputError,
    ValidationError,
)
from .gec import CorrectionResult, correct
from .ged import (
    DetectorBackend,
    ReferenceBackend,
    RemoteBackend,
    RuleBackend,
    classify_flagged,
    detect_binary,
    labels_from_reference,
    load_lexicon,
    run_cascade,
)
from .prompts import Prompt, PromptFilter, PromptStore
from .scoring import (
    CefrLevel,
    FeatureVector,
    RemoteScorer,
    ScoringConfig,
    default_scoring_config,
    extract_features,
    load_scoring_config,
    meets_length_requirement,
    min_words_for,
    score,
)
from .service import ServiceConfig, SessionService, lcs_word_diff
from .tags import ErrorTag, TokenLabel
from .textcore import (
    NormProfile,
    SpanRange,
    Token,
    count_words,
    join_tokens,
    normalize,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"
