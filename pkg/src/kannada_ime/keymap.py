"""Data-driven keyboard layout with a strict one-key-one-phoneme mapping.

A layout document maps (base character, shift) pairs to phoneme names.
Loading validates the bijection: every phoneme of the inventory appears on
exactly one key, and no key is assigned twice.  Resolution of a physical
key event to a semantic action is a pure function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .phonology import (
    KANNADA_DIGITS,
    PHONEME_NAMES,
    Phoneme,
    PhonemeKind,
    ZWJ,
    ZWNJ,
)

BACKSPACE = "\b"

DEFAULT_LAYOUT_RESOURCE = "kgp_default.layout"


class Modifier(enum.Enum):
    NONE = "none"
    ALT = "alt"
    SHIFT = "shift"
    CTRL = "ctrl"


class ActionKind(enum.Enum):
    PHONEME = "phoneme"
    DIGIT = "digit"
    DELETE = "delete"
    ZWJ = "zwj"
    ZWNJ = "zwnj"
    SPACE_BARRIER = "space"
    PASSTHROUGH = "passthrough"


class DeleteGranularity(enum.Enum):
    PHONEME = "phoneme"
    CHARACTER = "character"
    SYLLABLE = "syllable"
    WORD = "word"


_DELETE_FOR_MODIFIER = {
    Modifier.NONE: DeleteGranularity.PHONEME,
    Modifier.ALT: DeleteGranularity.CHARACTER,
    Modifier.SHIFT: DeleteGranularity.SYLLABLE,
    Modifier.CTRL: DeleteGranularity.WORD,
}


@dataclass(frozen=True)
class KeyEvent:
    """A physical keystroke.

    ``hold`` is the press-and-hold (or pressure) gesture; it is only
    meaningful when the key resolves to a consonant and is otherwise
    treated as a tap.  ``modifier`` matters only for backspace.
    """

    base: str
    shift: bool = False
    hold: bool = False
    modifier: Modifier = Modifier.NONE


@dataclass(frozen=True)
class KeyAction:
    kind: ActionKind
    phoneme: Optional[Phoneme] = None
    delete_granularity: Optional[DeleteGranularity] = None
    char: str = ""  # emitted text for DIGIT / PASSTHROUGH
    held: bool = False


class LayoutError(ValueError):
    """Malformed layout document or one-phoneme-one-key violation."""


@dataclass(frozen=True)
class KeyLayout:
    name: str
    entries: dict[tuple[str, bool], Phoneme] = field(default_factory=dict)

    def key_for(self, p: Phoneme) -> tuple[str, bool]:
        for key, q in self.entries.items():
            if q == p:
                return key
        raise KeyError(p)


def load_layout(text: str, name: str = "custom") -> KeyLayout:
    """Parse and validate a layout document.

    One entry per line: ``BASE SHIFTFLAG ACTION`` where SHIFTFLAG is ``-``
    (unshifted) or ``S`` (shifted) and ACTION is a phoneme name such as
    ``ka``, ``aa``, ``virama`` or ``anusvara``.  ``#`` starts a comment.
    """
    entries: dict[tuple[str, bool], Phoneme] = {}
    assigned: dict[Phoneme, tuple[str, bool]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise LayoutError("line %d: expected 'BASE SHIFTFLAG ACTION'" % lineno)
        base, flag, action = parts
        if len(base) != 1:
            raise LayoutError("line %d: base must be a single character" % lineno)
        if flag not in ("-", "S"):
            raise LayoutError("line %d: shift flag must be '-' or 'S'" % lineno)
        shift = flag == "S"
        if action not in PHONEME_NAMES:
            raise LayoutError("line %d: unknown phoneme name %r" % (lineno, action))
        key = (base.lower(), shift)
        if key in entries:
            raise LayoutError("line %d: key %r assigned twice" % (lineno, key))
        phoneme = PHONEME_NAMES[action]
        if phoneme in assigned:
            raise LayoutError(
                "line %d: phoneme %r already on key %r (one phoneme, one key)"
                % (lineno, action, assigned[phoneme])
            )
        entries[key] = phoneme
        assigned[phoneme] = key
    missing = [name_ for name_, p in PHONEME_NAMES.items() if p not in assigned]
    if missing:
        raise LayoutError("layout leaves phonemes unassigned: %s" % ", ".join(sorted(missing)))
    return KeyLayout(name=name, entries=entries)


def load_default_layout() -> KeyLayout:
    res = resources.files("kannada_ime").joinpath("layouts").joinpath(DEFAULT_LAYOUT_RESOURCE)
    text = res.read_text("utf-8")
    return load_layout(text, name="kgp_default")


def resolve(layout: KeyLayout, ev: KeyEvent, *, ascii_digits: bool = False) -> KeyAction:
    """Resolve a key event to its semantic action.  Total: unmapped keys
    become passthrough."""
    if ev.base in (BACKSPACE, "backspace"):
        return KeyAction(ActionKind.DELETE, delete_granularity=_DELETE_FOR_MODIFIER[ev.modifier])
    if ev.base == " ":
        return KeyAction(ActionKind.SPACE_BARRIER, char=" ")
    if ev.base == ZWJ:
        return KeyAction(ActionKind.ZWJ, char=ZWJ)
    if ev.base == ZWNJ:
        return KeyAction(ActionKind.ZWNJ, char=ZWNJ)
    if ev.base.isdigit() and ev.base.isascii():
        out = ev.base if ascii_digits else KANNADA_DIGITS[int(ev.base)]
        return KeyAction(ActionKind.DIGIT, char=out)
    phoneme = layout.entries.get((ev.base.lower(), ev.shift))
    if phoneme is None:
        return KeyAction(ActionKind.PASSTHROUGH, char=ev.base)
    held = ev.hold and phoneme.kind is PhonemeKind.CONSONANT
    return KeyAction(ActionKind.PHONEME, phoneme=phoneme, held=held)
