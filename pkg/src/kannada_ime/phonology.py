"""Kannada sound-and-script model.

Phoneme inventory, consonant classification (varga/position, aspiration,
nasality), vowel forms (independent letters vs. dependent matras), cluster
legality and syllable rendering to Unicode codepoints in the Kannada block
(U+0C80-U+0CFF).

All tables here are immutable module-level data; everything is safe for
concurrent reads.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from typing import Optional, Sequence


class VowelId(enum.Enum):
    """The 13 modern Kannada vowels."""

    A = "a"
    AA = "aa"
    I = "i"
    II = "ii"
    U = "u"
    UU = "uu"
    RU = "ru"  # vocalic r
    E = "e"
    EE = "ee"
    AI = "ai"
    O = "o"
    OO = "oo"
    AU = "au"


class ConsonantId(enum.Enum):
    """25 classified (varga) consonants plus the 9 unclassified ones."""

    KA = "ka"
    KHA = "kha"
    GA = "ga"
    GHA = "gha"
    NGA = "nga"
    CA = "ca"
    CHA = "cha"
    JA = "ja"
    JHA = "jha"
    NYA = "nya"
    TTA = "tta"
    TTHA = "ttha"
    DDA = "dda"
    DDHA = "ddha"
    NNA = "nna"
    TA = "ta"
    THA = "tha"
    DA = "da"
    DHA = "dha"
    NA = "na"
    PA = "pa"
    PHA = "pha"
    BA = "ba"
    BHA = "bha"
    MA = "ma"
    YA = "ya"
    RA = "ra"
    LA = "la"
    VA = "va"
    SHA = "sha"
    SSA = "ssa"
    SA = "sa"
    HA = "ha"
    LLA = "lla"


class Varga(enum.Enum):
    VELAR = "velar"
    PALATAL = "palatal"
    RETROFLEX = "retroflex"
    DENTAL = "dental"
    LABIAL = "labial"
    UNCLASSIFIED = "unclassified"


class PhonemeKind(enum.Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    ANUSVARA = "anusvara"
    VISARGA = "visarga"
    NULL_VOWEL = "null_vowel"  # the virama


@dataclass(frozen=True)
class Phoneme:
    """Atomic unit of input.

    Exactly one of ``vowel``/``consonant`` is set for the VOWEL/CONSONANT
    kinds; neither for the other kinds.  The null vowel (virama) is a
    phoneme in its own right, not a rendering artifact.
    """

    kind: PhonemeKind
    vowel: Optional[VowelId] = None
    consonant: Optional[ConsonantId] = None

    def __post_init__(self) -> None:
        if self.kind is PhonemeKind.VOWEL:
            if self.vowel is None or self.consonant is not None:
                raise ValueError("vowel phoneme must carry exactly a VowelId")
        elif self.kind is PhonemeKind.CONSONANT:
            if self.consonant is None or self.vowel is not None:
                raise ValueError("consonant phoneme must carry exactly a ConsonantId")
        elif self.vowel is not None or self.consonant is not None:
            raise ValueError("%s phoneme carries no vowel/consonant" % self.kind.value)


def vowel(v: VowelId) -> Phoneme:
    return Phoneme(PhonemeKind.VOWEL, vowel=v)


def consonant(c: ConsonantId) -> Phoneme:
    return Phoneme(PhonemeKind.CONSONANT, consonant=c)


VIRAMA_PHONEME = Phoneme(PhonemeKind.NULL_VOWEL)
ANUSVARA_PHONEME = Phoneme(PhonemeKind.ANUSVARA)
VISARGA_PHONEME = Phoneme(PhonemeKind.VISARGA)


@dataclass(frozen=True)
class ConsonantTraits:
    varga: Varga
    position_in_varga: Optional[int]  # 1..5, None for unclassified
    aspirated: bool
    nasal: bool


_VARGA_ROWS = {
    Varga.VELAR: (ConsonantId.KA, ConsonantId.KHA, ConsonantId.GA, ConsonantId.GHA, ConsonantId.NGA),
    Varga.PALATAL: (ConsonantId.CA, ConsonantId.CHA, ConsonantId.JA, ConsonantId.JHA, ConsonantId.NYA),
    Varga.RETROFLEX: (ConsonantId.TTA, ConsonantId.TTHA, ConsonantId.DDA, ConsonantId.DDHA, ConsonantId.NNA),
    Varga.DENTAL: (ConsonantId.TA, ConsonantId.THA, ConsonantId.DA, ConsonantId.DHA, ConsonantId.NA),
    Varga.LABIAL: (ConsonantId.PA, ConsonantId.PHA, ConsonantId.BA, ConsonantId.BHA, ConsonantId.MA),
}

_TRAITS: dict[ConsonantId, ConsonantTraits] = {}
for _varga, _row in _VARGA_ROWS.items():
    for _pos, _c in enumerate(_row, start=1):
        _TRAITS[_c] = ConsonantTraits(
            varga=_varga,
            position_in_varga=_pos,
            aspirated=_pos in (2, 4),
            nasal=_pos == 5,
        )
for _c in ConsonantId:
    if _c not in _TRAITS:
        _TRAITS[_c] = ConsonantTraits(Varga.UNCLASSIFIED, None, False, False)


def consonant_traits(c: ConsonantId) -> ConsonantTraits:
    """Fixed classification of a consonant; total over the inventory."""
    return _TRAITS[c]


def is_legal_cluster(first: ConsonantId, second: ConsonantId) -> bool:
    """Whether ``first + virama + second`` forms a pronounceable cluster.

    An aspirated consonant cannot take another aspirated consonant as its
    subscript; every other pairing is allowed.
    """
    return not (_TRAITS[first].aspirated and _TRAITS[second].aspirated)


# --- Unicode realization -------------------------------------------------

VIRAMA_SIGN = "್"
ANUSVARA_SIGN = "ಂ"
VISARGA_SIGN = "ಃ"
ZWJ = "\u200d"
ZWNJ = "\u200c"

KANNADA_DIGITS = "೦೧೨೩೪೫೬೭೮೯"

INDEPENDENT_VOWEL = {
    VowelId.A: "ಅ",
    VowelId.AA: "ಆ",
    VowelId.I: "ಇ",
    VowelId.II: "ಈ",
    VowelId.U: "ಉ",
    VowelId.UU: "ಊ",
    VowelId.RU: "ಋ",
    VowelId.E: "ಎ",
    VowelId.EE: "ಏ",
    VowelId.AI: "ಐ",
    VowelId.O: "ಒ",
    VowelId.OO: "ಓ",
    VowelId.AU: "ಔ",
}

# Dependent vowel signs; the inherent vowel a has no visible sign.
VOWEL_SIGN = {
    VowelId.A: "",
    VowelId.AA: "ಾ",
    VowelId.I: "ಿ",
    VowelId.II: "ೀ",
    VowelId.U: "ು",
    VowelId.UU: "ೂ",
    VowelId.RU: "ೃ",
    VowelId.E: "ೆ",
    VowelId.EE: "ೇ",
    VowelId.AI: "ೈ",
    VowelId.O: "ೊ",
    VowelId.OO: "ೋ",
    VowelId.AU: "ೌ",
}

CONSONANT_LETTER = {
    ConsonantId.KA: "ಕ",
    ConsonantId.KHA: "ಖ",
    ConsonantId.GA: "ಗ",
    ConsonantId.GHA: "ಘ",
    ConsonantId.NGA: "ಙ",
    ConsonantId.CA: "ಚ",
    ConsonantId.CHA: "ಛ",
    ConsonantId.JA: "ಜ",
    ConsonantId.JHA: "ಝ",
    ConsonantId.NYA: "ಞ",
    ConsonantId.TTA: "ಟ",
    ConsonantId.TTHA: "ಠ",
    ConsonantId.DDA: "ಡ",
    ConsonantId.DDHA: "ಢ",
    ConsonantId.NNA: "ಣ",
    ConsonantId.TA: "ತ",
    ConsonantId.THA: "ಥ",
    ConsonantId.DA: "ದ",
    ConsonantId.DHA: "ಧ",
    ConsonantId.NA: "ನ",
    ConsonantId.PA: "ಪ",
    ConsonantId.PHA: "ಫ",
    ConsonantId.BA: "ಬ",
    ConsonantId.BHA: "ಭ",
    ConsonantId.MA: "ಮ",
    ConsonantId.YA: "ಯ",
    ConsonantId.RA: "ರ",
    ConsonantId.LA: "ಲ",
    ConsonantId.LLA: "ಳ",
    ConsonantId.VA: "ವ",
    ConsonantId.SHA: "ಶ",
    ConsonantId.SSA: "ಷ",
    ConsonantId.SA: "ಸ",
    ConsonantId.HA: "ಹ",
}

# Reverse lookups for parsing rendered text.
_CHAR_TO_INDEPENDENT = {ch: v for v, ch in INDEPENDENT_VOWEL.items()}
_CHAR_TO_SIGN = {ch: v for v, ch in VOWEL_SIGN.items() if ch}
_CHAR_TO_CONSONANT = {ch: c for c, ch in CONSONANT_LETTER.items()}


class MalformedSyllableError(ValueError):
    """A syllable violates its structural invariants."""


@dataclass(frozen=True)
class Syllable:
    """A maximal syllable: (C virama)* C V? with optional final mark.

    ``onset`` is the consonant cluster (first member is the base, the rest
    are subscripts).  ``trailing_virama`` marks a vowel-less syllable
    (end-virama or an open cluster awaiting its vowel).  ``zwj_after``
    holds onset indices after which a joiner override was recorded.
    """

    onset: tuple[ConsonantId, ...] = ()
    vowel: Optional[VowelId] = None
    trailing_virama: bool = False
    final_mark: Optional[PhonemeKind] = None  # ANUSVARA or VISARGA
    zwj_after: frozenset[int] = field(default_factory=frozenset)

    def check(self) -> None:
        if not self.onset and self.vowel is None:
            raise MalformedSyllableError("syllable with neither onset nor vowel")
        if not self.onset and self.trailing_virama:
            raise MalformedSyllableError("trailing virama without a consonant")
        if self.trailing_virama and self.vowel is not None:
            raise MalformedSyllableError("syllable cannot carry both vowel and trailing virama")
        if self.final_mark not in (None, PhonemeKind.ANUSVARA, PhonemeKind.VISARGA):
            raise MalformedSyllableError("final mark must be anusvara or visarga")


def render_syllable(s: Syllable) -> str:
    """Emit the syllable in storage order (NFC-stable).

    Consonants joined by viramas, then the vowel sign (independent form for
    a pure-vowel syllable), optional anusvara/visarga, and a final virama
    for vowel-less syllables.  Visual shaping (repha placement, subscript
    glyphs) is left to the platform shaper.
    """
    s.check()
    out: list[str] = []
    if s.onset:
        for i, c in enumerate(s.onset):
            if i:
                out.append(VIRAMA_SIGN)
            out.append(CONSONANT_LETTER[c])
            if i in s.zwj_after:
                out.append(ZWJ)
        if s.trailing_virama:
            out.append(VIRAMA_SIGN)
        elif s.vowel is not None:
            out.append(VOWEL_SIGN[s.vowel])
        # no vowel recorded: inherent a, nothing to emit
    else:
        out.append(INDEPENDENT_VOWEL[s.vowel])  # type: ignore[index]
    if s.final_mark is PhonemeKind.ANUSVARA:
        out.append(ANUSVARA_SIGN)
    elif s.final_mark is PhonemeKind.VISARGA:
        out.append(VISARGA_SIGN)
    return "".join(out)


def is_kannada_char(ch: str) -> bool:
    return "ಀ" <= ch <= "೿"


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def char_to_phoneme(ch: str) -> Optional[Phoneme]:
    """Map one Kannada scalar to its phoneme, or None if it has no phoneme
    reading (digits, stray signs)."""
    if ch in _CHAR_TO_CONSONANT:
        return consonant(_CHAR_TO_CONSONANT[ch])
    if ch in _CHAR_TO_INDEPENDENT:
        return vowel(_CHAR_TO_INDEPENDENT[ch])
    if ch in _CHAR_TO_SIGN:
        return vowel(_CHAR_TO_SIGN[ch])
    if ch == VIRAMA_SIGN:
        return VIRAMA_PHONEME
    if ch == ANUSVARA_SIGN:
        return ANUSVARA_PHONEME
    if ch == VISARGA_SIGN:
        return VISARGA_PHONEME
    return None


ALL_PHONEMES: tuple[Phoneme, ...] = (
    tuple(vowel(v) for v in VowelId)
    + tuple(consonant(c) for c in ConsonantId)
    + (VIRAMA_PHONEME, ANUSVARA_PHONEME, VISARGA_PHONEME)
)

PHONEME_NAMES: dict[str, Phoneme] = {}
for _v in VowelId:
    PHONEME_NAMES[_v.value] = vowel(_v)
for _c in ConsonantId:
    PHONEME_NAMES[_c.value] = consonant(_c)
PHONEME_NAMES["virama"] = VIRAMA_PHONEME
PHONEME_NAMES["anusvara"] = ANUSVARA_PHONEME
PHONEME_NAMES["visarga"] = VISARGA_PHONEME


def phoneme_name(p: Phoneme) -> str:
    if p.kind is PhonemeKind.VOWEL:
        return p.vowel.value  # type: ignore[union-attr]
    if p.kind is PhonemeKind.CONSONANT:
        return p.consonant.value  # type: ignore[union-attr]
    return {
        PhonemeKind.NULL_VOWEL: "virama",
        PhonemeKind.ANUSVARA: "anusvara",
        PhonemeKind.VISARGA: "visarga",
    }[p.kind]
