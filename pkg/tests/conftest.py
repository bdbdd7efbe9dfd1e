import random

import pytest

from kannada_ime import cli, composer as cp, keymap as km


@pytest.fixture(scope="session")
def layout():
    return km.load_default_layout()


def drive(script, config=None, layout=None):
    """Replay a keystroke script; returns (buffer, rendered, trace, notices)."""
    layout = layout or km.load_default_layout()
    config = config or cp.ComposerConfig()
    buf = cp.EditorBuffer.empty()
    trace = []
    notices = []
    for ev in cli.parse_script(script):
        action = km.resolve(layout, ev)
        buf, notice = cp.apply(buf, action, config)
        if notice is not None:
            notices.append(notice)
        trace.append(cp.render(buf))
    return buf, cp.render(buf), trace, notices


_CONSONANT_KEYS = list("qwrtyupsdghjklzxcvbnm")
_VOWEL_KEYS = list("aeiou")
_SHIFTED = [k.upper() for k in "qwsdgjbcktpynlaeiourfzmh"]
_HOLDS = [k + "+" for k in _CONSONANT_KEYS] + [k.upper() + "+" for k in "qwsdgjbcktpynl"]


def random_script(rng: random.Random, length=None, deletes=True, overrides=False, spaces=True):
    population = _CONSONANT_KEYS * 2 + _VOWEL_KEYS * 2 + _SHIFTED + _HOLDS + ["f"] * 3
    if spaces:
        population += ["<SP>"] * 2
    if deletes:
        population += ["<BS>", "<A-BS>", "<S-BS>", "<C-BS>"]
    if overrides:
        population += ["<ZWJ>", "<ZWNJ>"]
    n = length or rng.randint(1, 14)
    return " ".join(rng.choice(population) for _ in range(n))


def random_config(rng: random.Random, **overrides_kw):
    kw = dict(
        default_vowel=rng.choice(list(cp.DefaultVowel)),
        ohok_mode=rng.choice(list(cp.OhokMode)),
    )
    kw.update(overrides_kw)
    return cp.ComposerConfig(**kw)
