"""Editing state machine.

The buffer is the ground-truth keystroke history as a sequence of tokens:
phonemes plus barrier tokens (space, ZWJ, ZWNJ) and literal characters
(digits, passthrough).  Everything else -- syllable structure, rendered
text -- is derived from it.  All operations are pure: they take a buffer
and return a new one, so snapshots can be shared freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Union

from . import phonology as ph
from .keymap import ActionKind, DeleteGranularity, KeyAction
from .phonology import (
    ConsonantId,
    Phoneme,
    PhonemeKind,
    Syllable,
    VowelId,
    consonant,
    is_legal_cluster,
    vowel,
)


class Barrier(enum.Enum):
    """Non-phoneme tokens that enter the buffer literally."""

    SPACE = " "
    ZWJ = ph.ZWJ
    ZWNJ = ph.ZWNJ


@dataclass(frozen=True)
class Literal:
    """A passthrough character (digit, punctuation)."""

    char: str


Token = Union[Phoneme, Barrier, Literal]


class DefaultVowel(enum.Enum):
    INHERENT_A = "a"
    NULL = "null"


class OhokMode(enum.Enum):
    OFF = "off"
    SVA_OTTU = "so"
    KANDANTE = "ko"
    ANDANTE = "ao"


class NoticeKind(enum.Enum):
    NON_INITIAL_VOWEL = "non-initial-vowel"
    ILLEGAL_ASPIRATED_CLUSTER = "illegal-aspirated-cluster"
    STRAY_VIRAMA = "stray-virama"
    STRAY_MARK = "stray-mark"
    HOLD_WITHOUT_HOST = "hold-without-host"
    SHUNYIFIED = "shunyified"
    ARKIFIED = "arkified"


@dataclass(frozen=True)
class Notice:
    kind: NoticeKind
    message: str


@dataclass(frozen=True)
class ComposerConfig:
    default_vowel: DefaultVowel = DefaultVowel.INHERENT_A
    ohok_mode: OhokMode = OhokMode.OFF
    shunyification: bool = True
    arkification: bool = True
    strict_rules: bool = True
    # Rendered cluster strings (e.g. "ರ್ಯ") that must not take the repha
    # form; a joiner is inserted to force the alternate shape.
    arkify_exceptions: frozenset[str] = frozenset()


@dataclass(frozen=True)
class EditorBuffer:
    tokens: tuple[Token, ...] = ()
    cursor: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.cursor <= len(self.tokens):
            raise ValueError("cursor out of range")

    @staticmethod
    def empty() -> "EditorBuffer":
        return EditorBuffer()

    def insert(self, new: Iterable[Token]) -> "EditorBuffer":
        new = tuple(new)
        toks = self.tokens[: self.cursor] + new + self.tokens[self.cursor :]
        return EditorBuffer(tokens=toks, cursor=self.cursor + len(new))

    def remove(self, start: int, end: int) -> "EditorBuffer":
        toks = self.tokens[:start] + self.tokens[end:]
        cur = self.cursor
        if cur > end:
            cur -= end - start
        elif cur > start:
            cur = start
        return EditorBuffer(tokens=toks, cursor=cur)


def _is_consonant(t: Optional[Token]) -> bool:
    return isinstance(t, Phoneme) and t.kind is PhonemeKind.CONSONANT

def _is_vowel(t: Optional[Token]) -> bool:
    return isinstance(t, Phoneme) and t.kind is PhonemeKind.VOWEL

def _is_virama(t: Optional[Token]) -> bool:
    return isinstance(t, Phoneme) and t.kind is PhonemeKind.NULL_VOWEL


def _prev_token(buf: EditorBuffer) -> Optional[Token]:
    return buf.tokens[buf.cursor - 1] if buf.cursor else None


def _cluster_host(buf: EditorBuffer) -> Optional[ConsonantId]:
    """Consonant immediately before a trailing virama at the cursor."""
    i = buf.cursor - 1
    if i < 1 or not _is_virama(buf.tokens[i]):
        return None
    prev = buf.tokens[i - 1]
    if _is_consonant(prev):
        return prev.consonant  # type: ignore[union-attr]
    return None


# --- rendering and parsing ----------------------------------------------


def render(buffer: EditorBuffer) -> str:
    """Rendered text of the whole buffer, in canonical storage order."""
    return render_tokens(buffer.tokens)


def render_tokens(tokens: Iterable[Token]) -> str:
    out: list[str] = []
    prev: Optional[Token] = None
    for t in tokens:
        if isinstance(t, Barrier):
            out.append(t.value)
        elif isinstance(t, Literal):
            out.append(t.char)
        elif t.kind is PhonemeKind.CONSONANT:
            out.append(ph.CONSONANT_LETTER[t.consonant])
        elif t.kind is PhonemeKind.NULL_VOWEL:
            out.append(ph.VIRAMA_SIGN)
        elif t.kind is PhonemeKind.VOWEL:
            if _is_consonant(prev):
                out.append(ph.VOWEL_SIGN[t.vowel])
            elif _is_virama(prev):
                raise ph.MalformedSyllableError("vowel sign directly after virama")
            else:
                out.append(ph.INDEPENDENT_VOWEL[t.vowel])
        elif t.kind is PhonemeKind.ANUSVARA:
            out.append(ph.ANUSVARA_SIGN)
        else:
            out.append(ph.VISARGA_SIGN)
        prev = t
    return "".join(out)


def parse_text(text: str) -> tuple[Token, ...]:
    """Inverse of :func:`render_tokens` for NFC Kannada text.

    Bare consonants parse without an explicit inherent vowel (that vowel is
    invisible, so it cannot be recovered).  The one exception: an independent
    vowel letter directly after a consonant gets an explicit inherent vowel
    inserted before it, since that is the only token sequence that renders
    back to the same text.  Non-Kannada characters become literal tokens;
    spaces and joiners become barriers.
    """
    tokens: list[Token] = []
    for chch in ph.nfc(text):
        if chch == " ":
            tokens.append(Barrier.SPACE)
        elif chch == ph.ZWJ:
            tokens.append(Barrier.ZWJ)
        elif chch == ph.ZWNJ:
            tokens.append(Barrier.ZWNJ)
        else:
            p = ph.char_to_phoneme(chch)
            if (
                p is not None
                and p.kind is PhonemeKind.VOWEL
                and chch in ph.INDEPENDENT_VOWEL.values()
                and tokens
                and not isinstance(tokens[-1], (Barrier, Literal))
                and tokens[-1].kind is PhonemeKind.CONSONANT
            ):
                tokens.append(ph.vowel(ph.VowelId.A))
            tokens.append(p if p is not None else Literal(chch))
    return tuple(tokens)


# --- segmentation --------------------------------------------------------


@dataclass(frozen=True)
class SyllableSpan:
    syllable: Syllable
    start: int  # token index, inclusive
    end: int  # token index, exclusive


def segment(buffer: EditorBuffer) -> list[Syllable]:
    return [s.syllable for s in segment_spans(buffer.tokens)]


def segment_spans(tokens: tuple[Token, ...]) -> list[SyllableSpan]:
    """Partition phoneme runs into maximal syllables.

    Barriers and literals are not part of any syllable; a ZWNJ breaks a
    cluster, a ZWJ between consonant and virama is recorded as an override
    mark inside the cluster.
    """
    spans: list[SyllableSpan] = []
    n = len(tokens)
    i = 0
    while i < n:
        t = tokens[i]
        if isinstance(t, (Barrier, Literal)):
            i += 1
            continue
        start = i
        if t.kind is PhonemeKind.VOWEL:
            syl = Syllable(vowel=t.vowel)
            i += 1
        elif t.kind is PhonemeKind.CONSONANT:
            onset = [t.consonant]
            zwj_after: set[int] = set()
            i += 1
            trailing = False
            while i < n:
                j = i
                if tokens[j] is Barrier.ZWJ and j + 1 < n and _is_virama(tokens[j + 1]):
                    zwj_after.add(len(onset) - 1)
                    j += 1
                if j < n and _is_virama(tokens[j]):
                    if j + 1 < n and _is_consonant(tokens[j + 1]):
                        onset.append(tokens[j + 1].consonant)  # type: ignore[union-attr]
                        i = j + 2
                        continue
                    trailing = True
                    i = j + 1
                break
            syl = Syllable(onset=tuple(onset), trailing_virama=trailing, zwj_after=frozenset(zwj_after))
            if not trailing and i < n and _is_vowel(tokens[i]):
                syl = replace(syl, vowel=tokens[i].vowel)
                i += 1
        elif t.kind in (PhonemeKind.ANUSVARA, PhonemeKind.VISARGA):
            # stray final mark; attach to the previous syllable if adjacent
            if spans and spans[-1].end == i:
                prev = spans[-1]
                if prev.syllable.final_mark is None:
                    spans[-1] = SyllableSpan(replace(prev.syllable, final_mark=t.kind), prev.start, i + 1)
                    i += 1
                    continue
            syl = Syllable(onset=(), vowel=None, final_mark=t.kind)
            # structurally empty; keep as its own degenerate span
            spans.append(SyllableSpan(syl, start, i + 1))
            i += 1
            continue
        else:  # stray virama with no base
            i += 1
            continue
        if i < n and isinstance(tokens[i], Phoneme) and tokens[i].kind in (
            PhonemeKind.ANUSVARA,
            PhonemeKind.VISARGA,
        ):
            syl = replace(syl, final_mark=tokens[i].kind)
            i += 1
        spans.append(SyllableSpan(syl, start, i))
    return spans


# --- convenience rules ---------------------------------------------------

_NASAL_KEYS = (ConsonantId.NA, ConsonantId.MA)


def shunyify(buffer: EditorBuffer) -> EditorBuffer:
    """Replace ``n/m + virama`` before a different consonant with anusvara.

    Geminate nasals (ನ್ನ, ಮ್ಮ) are left alone: they are ordinary
    self-conjuncts, not nasalization.  Any barrier between the nasal and
    the following consonant suppresses the rule.  Idempotent.
    """
    toks = list(buffer.tokens)
    i = 0
    cursor = buffer.cursor
    while i < len(toks) - 2:
        a, b, c = toks[i], toks[i + 1], toks[i + 2]
        if (
            _is_consonant(a)
            and a.consonant in _NASAL_KEYS  # type: ignore[union-attr]
            and _is_virama(b)
            and _is_consonant(c)
            and c.consonant != a.consonant  # type: ignore[union-attr]
        ):
            toks[i : i + 2] = [ph.ANUSVARA_PHONEME]
            if cursor > i + 1:
                cursor -= 1
        i += 1
    return EditorBuffer(tokens=tuple(toks), cursor=min(cursor, len(toks)))


def arkify(buffer: EditorBuffer, config: ComposerConfig) -> EditorBuffer:
    """Force the non-repha form for configured exception clusters.

    ``ra + virama + C`` already takes the repha form under standard
    shaping; for clusters listed in ``config.arkify_exceptions`` a joiner
    is inserted after the ra so the shaper picks the alternate form.
    Typing is unaffected either way.  Idempotent.
    """
    if not config.arkify_exceptions:
        return buffer
    toks = list(buffer.tokens)
    cursor = buffer.cursor
    i = 0
    while i + 2 <= len(toks) - 1:
        a, b, c = toks[i], toks[i + 1], toks[i + 2]
        if (
            _is_consonant(a)
            and a.consonant is ConsonantId.RA  # type: ignore[union-attr]
            and _is_virama(b)
            and _is_consonant(c)
        ):
            cluster = render_tokens([a, b, c])
            if cluster in config.arkify_exceptions:
                toks.insert(i + 1, Barrier.ZWJ)
                if cursor > i:
                    cursor += 1
                i += 1
        i += 1
    return EditorBuffer(tokens=tuple(toks), cursor=cursor)


def _run_rules(buffer: EditorBuffer, config: ComposerConfig) -> tuple[EditorBuffer, Optional[Notice]]:
    notice = None
    if config.shunyification:
        fixed = shunyify(buffer)
        if fixed != buffer:
            notice = Notice(NoticeKind.SHUNYIFIED, "nasal + virama converted to anusvara")
        buffer = fixed
    if config.arkification:
        fixed = arkify(buffer, config)
        if fixed != buffer:
            notice = Notice(NoticeKind.ARKIFIED, "joiner inserted for exception cluster")
        buffer = fixed
    return buffer, notice


# --- the state machine ---------------------------------------------------


def apply(
    buffer: EditorBuffer, action: KeyAction, config: ComposerConfig
) -> tuple[EditorBuffer, Optional[Notice]]:
    """Apply one resolved key action; returns the new buffer and an
    optional notice (blocked input or a convenience rule firing)."""
    if action.kind is ActionKind.DELETE:
        return delete(buffer, action.delete_granularity), None
    if action.kind is ActionKind.SPACE_BARRIER:
        return buffer.insert([Barrier.SPACE]), None
    if action.kind is ActionKind.ZWJ:
        return buffer.insert([Barrier.ZWJ]), None
    if action.kind is ActionKind.ZWNJ:
        return buffer.insert([Barrier.ZWNJ]), None
    if action.kind in (ActionKind.DIGIT, ActionKind.PASSTHROUGH):
        if not action.char:
            return buffer, None
        return buffer.insert([Literal(action.char)]), None

    p = action.phoneme
    assert p is not None
    if p.kind is PhonemeKind.CONSONANT:
        held = action.held and config.ohok_mode is not OhokMode.OFF
        if held:
            return _apply_hold(buffer, p.consonant, config)  # type: ignore[arg-type]
        return _apply_consonant_tap(buffer, p.consonant, config)  # type: ignore[arg-type]
    if p.kind is PhonemeKind.VOWEL:
        return _apply_vowel(buffer, p.vowel, config)  # type: ignore[arg-type]
    if p.kind is PhonemeKind.NULL_VOWEL:
        return _apply_virama(buffer, config)
    return _apply_final_mark(buffer, p, config)


def _blocked(buffer: EditorBuffer, kind: NoticeKind, msg: str) -> tuple[EditorBuffer, Notice]:
    return buffer, Notice(kind, msg)


def _check_join(buffer: EditorBuffer, c: ConsonantId, config: ComposerConfig) -> Optional[Notice]:
    """Aspirated-conjunct check for a consonant joining the open cluster."""
    host = _cluster_host(buffer)
    if host is not None and config.strict_rules and not is_legal_cluster(host, c):
        return Notice(
            NoticeKind.ILLEGAL_ASPIRATED_CLUSTER,
            "aspirated consonant cannot take an aspirated subscript (%s + %s)"
            % (host.value, c.value),
        )
    return None


def _finish(buffer: EditorBuffer, config: ComposerConfig) -> tuple[EditorBuffer, Optional[Notice]]:
    return _run_rules(buffer, config)


def _apply_consonant_tap(
    buffer: EditorBuffer, c: ConsonantId, config: ComposerConfig
) -> tuple[EditorBuffer, Optional[Notice]]:
    bad = _check_join(buffer, c, config)
    if bad:
        return buffer, bad
    if config.default_vowel is DefaultVowel.NULL:
        return _finish(buffer.insert([consonant(c), ph.VIRAMA_PHONEME]), config)
    return _finish(buffer.insert([consonant(c)]), config)


def _apply_hold(
    buffer: EditorBuffer, c: ConsonantId, config: ComposerConfig
) -> tuple[EditorBuffer, Optional[Notice]]:
    mode = config.ohok_mode
    null_default = config.default_vowel is DefaultVowel.NULL
    dvitva_ok = is_legal_cluster(c, c) or not config.strict_rules

    if mode is OhokMode.SVA_OTTU:
        if not dvitva_ok:
            return _blocked(
                buffer,
                NoticeKind.ILLEGAL_ASPIRATED_CLUSTER,
                "aspirated consonant cannot double itself (%s)" % c.value,
            )
        bad = _check_join(buffer, c, config)
        if bad:
            return buffer, bad
        toks: list[Token] = [consonant(c), ph.VIRAMA_PHONEME, consonant(c)]
        if null_default:
            toks.append(ph.VIRAMA_PHONEME)
        return _finish(buffer.insert(toks), config)

    if mode is OhokMode.ANDANTE:
        bad = _check_join(buffer, c, config)
        if bad:
            return buffer, bad
        return _finish(buffer.insert([consonant(c), ph.VIRAMA_PHONEME]), config)

    # Kandante: written order -- the held consonant becomes a subscript of
    # the consonant before it.
    prev = _prev_token(buffer)
    if null_default:
        if _is_virama(prev):
            # cluster already open: joining is what a plain tap does
            return _apply_consonant_tap(buffer, c, config)
        # no host consonant (word start or after an explicit vowel): the
        # held key supplies both base and subscript
        if not dvitva_ok:
            return _blocked(
                buffer,
                NoticeKind.ILLEGAL_ASPIRATED_CLUSTER,
                "aspirated consonant cannot double itself (%s)" % c.value,
            )
        return _finish(
            buffer.insert([consonant(c), ph.VIRAMA_PHONEME, consonant(c), ph.VIRAMA_PHONEME]),
            config,
        )
    if _is_consonant(prev):
        host = prev.consonant  # type: ignore[union-attr]
        if config.strict_rules and not is_legal_cluster(host, c):
            return _blocked(
                buffer,
                NoticeKind.ILLEGAL_ASPIRATED_CLUSTER,
                "aspirated consonant cannot take an aspirated subscript (%s + %s)"
                % (host.value, c.value),
            )
        return _finish(buffer.insert([ph.VIRAMA_PHONEME, consonant(c)]), config)
    if _is_virama(prev):
        return _apply_consonant_tap(buffer, c, config)
    new, _ = _apply_consonant_tap(buffer, c, config)
    return new, Notice(
        NoticeKind.HOLD_WITHOUT_HOST,
        "no preceding consonant to attach %s to; entered as a tap" % c.value,
    )


def _word_initial(buffer: EditorBuffer) -> bool:
    prev = _prev_token(buffer)
    return prev is None or isinstance(prev, (Barrier, Literal))


def _apply_vowel(
    buffer: EditorBuffer, v: VowelId, config: ComposerConfig
) -> tuple[EditorBuffer, Optional[Notice]]:
    prev = _prev_token(buffer)
    if _is_virama(prev):
        # close the open cluster: the vowel replaces the trailing virama
        cut = buffer.remove(buffer.cursor - 1, buffer.cursor)
        return _finish(cut.insert([vowel(v)]), config)
    if _is_consonant(prev) or _word_initial(buffer):
        return _finish(buffer.insert([vowel(v)]), config)
    if config.strict_rules:
        return _blocked(
            buffer,
            NoticeKind.NON_INITIAL_VOWEL,
            "a standalone vowel is only allowed at the beginning of a word",
        )
    return _finish(buffer.insert([vowel(v)]), config)


def _apply_virama(
    buffer: EditorBuffer, config: ComposerConfig
) -> tuple[EditorBuffer, Optional[Notice]]:
    prev = _prev_token(buffer)
    if _is_consonant(prev):
        return _finish(buffer.insert([ph.VIRAMA_PHONEME]), config)
    return _blocked(buffer, NoticeKind.STRAY_VIRAMA, "null vowel needs a preceding consonant")


def _apply_final_mark(
    buffer: EditorBuffer, p: Phoneme, config: ComposerConfig
) -> tuple[EditorBuffer, Optional[Notice]]:
    prev = _prev_token(buffer)
    if _is_consonant(prev) or _is_vowel(prev) or not config.strict_rules:
        return _finish(buffer.insert([p]), config)
    name = "anusvara" if p.kind is PhonemeKind.ANUSVARA else "visarga"
    return _blocked(buffer, NoticeKind.STRAY_MARK, "%s needs a preceding syllable" % name)


# --- deletion ------------------------------------------------------------


def delete(buffer: EditorBuffer, granularity: DeleteGranularity) -> EditorBuffer:
    """The four deletions.  Deleting never re-runs convenience rules, so
    removing a spacing barrier merges its neighbours verbatim (the
    override escape hatch)."""
    if buffer.cursor == 0:
        return buffer
    if granularity is DeleteGranularity.PHONEME:
        return buffer.remove(buffer.cursor - 1, buffer.cursor)
    if granularity is DeleteGranularity.SYLLABLE:
        return _delete_syllable(buffer)
    if granularity is DeleteGranularity.CHARACTER:
        return _delete_character(buffer)
    return _delete_word(buffer)


def _delete_syllable(buffer: EditorBuffer) -> EditorBuffer:
    prev = _prev_token(buffer)
    if isinstance(prev, (Barrier, Literal)):
        return buffer.remove(buffer.cursor - 1, buffer.cursor)
    spans = segment_spans(buffer.tokens[: buffer.cursor])
    if not spans:
        return buffer.remove(buffer.cursor - 1, buffer.cursor)
    last = spans[-1]
    return buffer.remove(last.start, last.end)


def _delete_character(buffer: EditorBuffer) -> EditorBuffer:
    prefix = render_tokens(buffer.tokens[: buffer.cursor])
    if not prefix:
        return buffer
    reparsed = parse_text(prefix[:-1])
    toks = reparsed + buffer.tokens[buffer.cursor :]
    return EditorBuffer(tokens=toks, cursor=len(reparsed))


def _delete_word(buffer: EditorBuffer) -> EditorBuffer:
    i = buffer.cursor - 1
    while i >= 0 and buffer.tokens[i] is Barrier.SPACE:
        i -= 1
    while i >= 0 and buffer.tokens[i] is not Barrier.SPACE:
        i -= 1
    return buffer.remove(i + 1, buffer.cursor)


def syllable_token_spans(buffer: EditorBuffer) -> list[SyllableSpan]:
    return segment_spans(buffer.tokens)
