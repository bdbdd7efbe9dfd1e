"""Kannada input-method engine: one-key-one-phoneme layout, press-and-hold
conjunct entry, convenience and error-prevention rules, and a corpus
keystroke-savings analyzer."""

from .composer import (
    Barrier,
    ComposerConfig,
    DefaultVowel,
    EditorBuffer,
    Literal,
    Notice,
    NoticeKind,
    OhokMode,
    apply,
    delete,
    parse_text,
    render,
    segment,
)
from .keymap import (
    DeleteGranularity,
    KeyAction,
    KeyEvent,
    KeyLayout,
    Modifier,
    load_default_layout,
    load_layout,
    resolve,
)
from .phonology import (
    ConsonantId,
    ConsonantTraits,
    Phoneme,
    PhonemeKind,
    Syllable,
    VowelId,
    consonant_traits,
    is_legal_cluster,
    render_syllable,
)
from .analyzer import (
    BASELINE_FREQUENCIES,
    FrequencyTable,
    SavingsReport,
    SyllableClass,
    classify_corpus,
    default_vowel_gain,
    keystrokes_for,
    savings_per_1000,
)

__version__ = "0.1.0"
