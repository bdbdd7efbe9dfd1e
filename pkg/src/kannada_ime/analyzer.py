"""Corpus syllable-frequency classification and keystroke-savings model.

Syllables fall into seven bins: plain vowel-or-C+a (mula), consonant with
a non-inherent vowel (gunitakshara), anusvara-bearing, and the conjunct
bins (self-conjunct, self-conjunct after a pure-vowel syllable, mixed
conjunct, end-virama).  The savings model prices each conjunct bin per
typing regime and hold mode.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from . import composer as cp
from .composer import DefaultVowel, OhokMode
from .phonology import PhonemeKind, Syllable, VowelId


class SyllableClass(enum.Enum):
    MULA = "mula_akshara"
    GUNITAKSHARA = "gunitakshara"
    ANUSVARA = "anusvara_sonne"
    SAJATI_DVITVA = "sajati_dvitva"
    DVITVA_POST_VOWEL = "dvitva_post_vowel"
    VIJATI = "vijati"
    END_VIRAMA = "end_virama"


CONJUNCT_CLASSES = (
    SyllableClass.SAJATI_DVITVA,
    SyllableClass.DVITVA_POST_VOWEL,
    SyllableClass.VIJATI,
    SyllableClass.END_VIRAMA,
)


class EmptyCorpusError(ValueError):
    """No Kannada syllables found in the input."""


class UnsupportedCombination(ValueError):
    """The given syllable class cannot be typed in this regime/mode."""


@dataclass(frozen=True)
class FrequencyTable:
    """Per-syllable fractions; the conjunct bins are disjoint and sum to
    ``ottu_total`` for classifier output."""

    mula_akshara: float
    gunitakshara: float
    anusvara_sonne: float
    ottu_total: float
    sajati_dvitva: float
    dvitva_post_vowel: float
    vijati: float
    end_virama: float

    def fraction(self, cls: SyllableClass) -> float:
        return getattr(self, cls.value)

    def per_1000(self, cls: SyllableClass) -> float:
        return self.fraction(cls) * 1000.0


# Baseline frequencies used when no corpus is supplied (per-mille values
# 424 / 393 / 56 / 182, conjuncts 87 / 11 / 88 / 7).  Note the published
# breakdown lists the post-vowel self-conjunct share alongside an ottu
# total of 18.2% that only covers the other three conjunct bins.
BASELINE_FREQUENCIES = FrequencyTable(
    mula_akshara=0.424,
    gunitakshara=0.393,
    anusvara_sonne=0.056,
    ottu_total=0.182,
    sajati_dvitva=0.087,
    dvitva_post_vowel=0.011,
    vijati=0.088,
    end_virama=0.007,
)


def classify_syllable(s: Syllable, previous: Optional[Syllable]) -> SyllableClass:
    """Bin one syllable; ``previous`` is the preceding syllable of the same
    word (None at word start)."""
    if s.trailing_virama:
        return SyllableClass.END_VIRAMA
    if len(s.onset) >= 2:
        if all(c == s.onset[0] for c in s.onset):
            if previous is not None and not previous.onset:
                return SyllableClass.DVITVA_POST_VOWEL
            return SyllableClass.SAJATI_DVITVA
        return SyllableClass.VIJATI
    if s.final_mark is PhonemeKind.ANUSVARA:
        return SyllableClass.ANUSVARA
    if s.onset and s.vowel not in (None, VowelId.A):
        return SyllableClass.GUNITAKSHARA
    return SyllableClass.MULA


def classify_tokens(tokens: Iterable[cp.Token]) -> dict[SyllableClass, int]:
    counts = {cls: 0 for cls in SyllableClass}
    word: list[cp.Token] = []

    def flush() -> None:
        prev: Optional[Syllable] = None
        for span in cp.segment_spans(tuple(word)):
            s = span.syllable
            if not s.onset and s.vowel is None:
                # degenerate stray mark
                counts[SyllableClass.ANUSVARA if s.final_mark is PhonemeKind.ANUSVARA else SyllableClass.MULA] += 1
            else:
                counts[classify_syllable(s, prev)] += 1
            prev = s
        word.clear()

    for t in tokens:
        if isinstance(t, cp.Literal) or t is cp.Barrier.SPACE:
            flush()
        else:
            word.append(t)
    flush()
    return counts


def classify_corpus(text: str) -> FrequencyTable:
    """Tally syllable classes over Kannada plain text; everything that is
    not Kannada acts as a word boundary and is otherwise ignored."""
    counts = classify_tokens(cp.parse_text(text))
    total = sum(counts.values())
    if total == 0:
        raise EmptyCorpusError("no Kannada syllables in the input")

    def frac(cls: SyllableClass) -> float:
        return counts[cls] / total

    ottu = sum(counts[c] for c in CONJUNCT_CLASSES) / total
    return FrequencyTable(
        mula_akshara=frac(SyllableClass.MULA),
        gunitakshara=frac(SyllableClass.GUNITAKSHARA),
        anusvara_sonne=frac(SyllableClass.ANUSVARA),
        ottu_total=ottu,
        sajati_dvitva=frac(SyllableClass.SAJATI_DVITVA),
        dvitva_post_vowel=frac(SyllableClass.DVITVA_POST_VOWEL),
        vijati=frac(SyllableClass.VIJATI),
        end_virama=frac(SyllableClass.END_VIRAMA),
    )


# --- keystroke model -------------------------------------------------------

_UNSUPPORTED = None

# Keys typed per conjunct instance, following the canonical typing traces
# for each (regime, mode).  None marks a combination that the mode cannot
# produce.  The sva-ottu gesture prices only the plain self-conjunct bin;
# see the savings notes.
_KEYS: dict[DefaultVowel, dict[OhokMode, dict[SyllableClass, Optional[int]]]] = {
    DefaultVowel.INHERENT_A: {
        OhokMode.OFF: {
            SyllableClass.SAJATI_DVITVA: 3,       # k f k
            SyllableClass.DVITVA_POST_VOWEL: 4,   # a k f k
            SyllableClass.VIJATI: 3,              # g f r
            SyllableClass.END_VIRAMA: 2,          # n f
        },
        OhokMode.SVA_OTTU: {
            SyllableClass.SAJATI_DVITVA: 1,       # k+
            SyllableClass.DVITVA_POST_VOWEL: 4,
            SyllableClass.VIJATI: 3,
            SyllableClass.END_VIRAMA: 2,
        },
        OhokMode.KANDANTE: {
            SyllableClass.SAJATI_DVITVA: 2,       # k k+
            SyllableClass.DVITVA_POST_VOWEL: 3,   # a k k+
            SyllableClass.VIJATI: 2,              # g r+
            SyllableClass.END_VIRAMA: 2,          # n f
        },
        OhokMode.ANDANTE: {
            SyllableClass.SAJATI_DVITVA: 2,       # k+ k
            SyllableClass.DVITVA_POST_VOWEL: 3,   # a k+ k
            SyllableClass.VIJATI: 2,              # g+ r
            SyllableClass.END_VIRAMA: 1,          # n+
        },
    },
    DefaultVowel.NULL: {
        OhokMode.OFF: {
            SyllableClass.SAJATI_DVITVA: 2,       # k k
            SyllableClass.DVITVA_POST_VOWEL: 3,   # a k k
            SyllableClass.VIJATI: 2,              # g r
            SyllableClass.END_VIRAMA: 1,          # n
        },
        OhokMode.SVA_OTTU: {
            SyllableClass.SAJATI_DVITVA: 1,       # k+
            SyllableClass.DVITVA_POST_VOWEL: 3,
            SyllableClass.VIJATI: 2,
            SyllableClass.END_VIRAMA: 1,
        },
        OhokMode.KANDANTE: {
            SyllableClass.SAJATI_DVITVA: 2,       # k k+
            SyllableClass.DVITVA_POST_VOWEL: 2,   # a k+
            SyllableClass.VIJATI: 2,              # g r+
            SyllableClass.END_VIRAMA: _UNSUPPORTED,
        },
        OhokMode.ANDANTE: {
            SyllableClass.SAJATI_DVITVA: 2,       # k+ k
            SyllableClass.DVITVA_POST_VOWEL: 3,   # a k+ k
            SyllableClass.VIJATI: 2,              # g+ r
            SyllableClass.END_VIRAMA: 1,          # n+
        },
    },
}

# Previously published figure for the a-default kandante column; the value
# derived from the frequency table is 186, suggesting a printing error.
PUBLISHED_A_KANDANTE = 196


def keystrokes_for(
    syllable_class: SyllableClass, default_vowel: DefaultVowel, mode: OhokMode
) -> int:
    """Per-instance key count for a conjunct class under a regime/mode."""
    try:
        table = _KEYS[default_vowel][mode]
        n = table[syllable_class]
    except KeyError:
        raise UnsupportedCombination(
            "no keystroke trace for %s" % syllable_class.value
        ) from None
    if n is None:
        raise UnsupportedCombination(
            "%s cannot be typed in %s/%s"
            % (syllable_class.value, default_vowel.value, mode.value)
        )
    return n


@dataclass(frozen=True)
class SavingsReport:
    default_vowel: DefaultVowel
    mode: OhokMode
    keys_saved_per_1000: int
    breakdown: dict[SyllableClass, float]
    notes: tuple[str, ...] = ()


def savings_per_1000(
    freq: FrequencyTable, default_vowel: DefaultVowel, mode: OhokMode
) -> SavingsReport:
    """Keys saved relative to plain (mode off) typing, per 1000 syllables.

    Unsupported class/mode combinations contribute nothing (they are typed
    the plain way).
    """
    breakdown: dict[SyllableClass, float] = {}
    total = 0.0
    for cls in CONJUNCT_CLASSES:
        normal = keystrokes_for(cls, default_vowel, OhokMode.OFF)
        try:
            with_mode = keystrokes_for(cls, default_vowel, mode)
        except UnsupportedCombination:
            with_mode = normal
        saved = (normal - with_mode) * freq.per_1000(cls)
        breakdown[cls] = saved
        total += saved
    notes: tuple[str, ...] = ()
    if default_vowel is DefaultVowel.INHERENT_A and mode is OhokMode.KANDANTE:
        notes = (
            "computed %d keys/1000; a previously published figure gives %d "
            "(suspected transposition)" % (round(total), PUBLISHED_A_KANDANTE),
        )
    return SavingsReport(
        default_vowel=default_vowel,
        mode=mode,
        keys_saved_per_1000=round(total),
        breakdown=breakdown,
        notes=notes,
    )


def default_vowel_gain(freq: FrequencyTable) -> int:
    """Keystrokes saved per 1000 syllables by the inherent-a default over
    the null default: one key gained per mula syllable, one key lost per
    conjunct (the explicit null vowel)."""
    return round((freq.mula_akshara - freq.ottu_total) * 1000.0)


# --- report formatting ----------------------------------------------------

_TOP_ROWS = (
    ("mula akshara", "mula_akshara"),
    ("gunitakshara", "gunitakshara"),
    ("anusvara/sonne", "anusvara_sonne"),
    ("ottu and end-virama", "ottu_total"),
)
_SUB_ROWS = (
    ("  sajati/dvitva", "sajati_dvitva"),
    ("  dvitva post-vowel", "dvitva_post_vowel"),
    ("  vijati", "vijati"),
    ("  end-virama", "end_virama"),
)


def format_frequency_report(freq: FrequencyTable, fmt: str = "text") -> str:
    rows = [(label, getattr(freq, attr)) for label, attr in _TOP_ROWS + _SUB_ROWS]
    if fmt == "csv":
        lines = ["category,fraction,percent"]
        for label, value in rows:
            lines.append("%s,%.6f,%.1f" % (label.strip(), value, value * 100))
        return "\n".join(lines) + "\n"
    width = max(len(label) for label, _ in rows)
    lines = ["syllable frequencies"]
    for label, value in rows:
        lines.append("%-*s  %5.1f%%" % (width, label, value * 100))
    return "\n".join(lines) + "\n"


def savings_grid(freq: FrequencyTable) -> list[SavingsReport]:
    return [
        savings_per_1000(freq, dv, mode)
        for dv in DefaultVowel
        for mode in OhokMode
    ]


def format_savings_report(freq: FrequencyTable, fmt: str = "text") -> str:
    reports = savings_grid(freq)
    if fmt == "csv":
        lines = ["default_vowel,mode,keys_saved_per_1000," + ",".join(c.value for c in CONJUNCT_CLASSES)]
        for r in reports:
            lines.append(
                "%s,%s,%d,%s"
                % (
                    r.default_vowel.value,
                    r.mode.value,
                    r.keys_saved_per_1000,
                    ",".join("%.1f" % r.breakdown[c] for c in CONJUNCT_CLASSES),
                )
            )
        return "\n".join(lines) + "\n"
    lines = ["keys saved per 1000 syllables (relative to mode off)", ""]
    header = "%-14s %-10s %8s   %s" % (
        "default vowel",
        "mode",
        "saved",
        "  ".join("%s" % c.value for c in CONJUNCT_CLASSES),
    )
    lines.append(header)
    notes: list[str] = []
    for r in reports:
        lines.append(
            "%-14s %-10s %8d   %s"
            % (
                r.default_vowel.value,
                r.mode.value,
                r.keys_saved_per_1000,
                "  ".join("%13.1f" % r.breakdown[c] for c in CONJUNCT_CLASSES),
            )
        )
        notes.extend(r.notes)
    lines.append("")
    lines.append("default-vowel gain (a vs null): %d keys/1000" % default_vowel_gain(freq))
    for note in notes:
        lines.append("note: " + note)
    return "\n".join(lines) + "\n"
