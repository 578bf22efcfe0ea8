"""Parser for the transformation-pipeline mini-language.

Grammar (whitespace-insensitive, keywords case-insensitive)::

    pipeline := <empty> | step (";" step)*
    step     := "rot"   AX AY AZ ANGLE
              | "boost" VX VY VZ
              | "sl2c"  RE IM RE IM RE IM RE IM     (alpha, beta, gamma, delta)

Numbers are decimal floats with an optional exponent. Angles are radians,
velocities are fractions of c. Steps are listed in application order: the
first step acts first, so the composed matrix is ``step_n @ ... @ step_1``.

Errors report the 1-based index of the offending token.
"""

import re
from dataclasses import dataclass

import numpy as np

from .errors import BadAxis, BadDeterminant, PipelineSyntaxError
from .spinor_cover import IDENTITY, as_sl2c, make_boost, make_rotation

_TOKEN = re.compile(r";|[^\s;]+")
_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class Rotation:
    axis: tuple
    angle: float

    def matrix(self) -> np.ndarray:
        return make_rotation(self.axis, self.angle)

    def describe(self) -> dict:
        return {"kind": "rot", "axis": list(self.axis), "angle": self.angle}


@dataclass(frozen=True)
class Boost:
    velocity: tuple

    def matrix(self) -> np.ndarray:
        return make_boost(self.velocity)

    def describe(self) -> dict:
        return {"kind": "boost", "velocity": list(self.velocity)}


@dataclass(frozen=True)
class RawSL2C:
    entries: tuple  # alpha, beta, gamma, delta

    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=complex).reshape(2, 2)

    def describe(self) -> dict:
        return {
            "kind": "sl2c",
            "entries": [[z.real, z.imag] for z in self.entries],
        }


@dataclass(frozen=True)
class PipelineSpec:
    steps: tuple = ()
    text: str = ""

    def compose(self) -> np.ndarray:
        A = IDENTITY.copy()
        for step in self.steps:
            A = step.matrix() @ A
        return A


_ARITY = {"rot": 4, "boost": 3, "sl2c": 8}


def _number(token: str, position: int) -> float:
    if not _NUMBER.fullmatch(token):
        raise PipelineSyntaxError(f"expected a number, got {token!r}", position)
    value = float(token)
    if not np.isfinite(value):
        raise PipelineSyntaxError(f"number {token!r} overflows", position)
    return value


def _build_step(keyword: str, args: list, position: int):
    if keyword == "rot":
        axis = np.array(args[:3])
        norm = np.linalg.norm(axis)
        if norm == 0.0 or not np.isfinite(norm):
            raise BadAxis(f"token {position}: rotation axis must be nonzero")
        return Rotation(tuple(float(c) for c in axis / norm), args[3])
    if keyword == "boost":
        step = Boost(tuple(args))
        make_boost(step.velocity)  # raises SuperluminalVelocity
        return step
    entries = tuple(complex(args[i], args[i + 1]) for i in range(0, 8, 2))
    try:
        as_sl2c(np.array(entries).reshape(2, 2))
    except BadDeterminant as exc:
        raise BadDeterminant(f"token {position}: {exc}") from None
    return RawSL2C(entries)


def tokenize(text: str) -> list:
    """Tokens as ``(text, 1-based index, 0-based column)`` triples."""
    return [(m.group(), i + 1, m.start()) for i, m in enumerate(_TOKEN.finditer(text))]


def parse_pipeline(text) -> PipelineSpec:
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8", errors="replace")
    tokens = tokenize(text)
    steps = []
    i = 0
    while i < len(tokens):
        word, pos, col = tokens[i]
        keyword = word.lower()
        if keyword not in _ARITY:
            expected = "a step keyword (rot, boost, sl2c)"
            raise PipelineSyntaxError(f"expected {expected}, got {word!r}", pos, col)
        arity = _ARITY[keyword]
        args = []
        for j in range(i + 1, i + 1 + arity):
            if j >= len(tokens) or tokens[j][0] == ";":
                end = tokens[j][1] if j < len(tokens) else len(tokens) + 1
                raise PipelineSyntaxError(
                    f"{keyword} takes {arity} numbers, got {len(args)}", end
                )
            args.append(_number(tokens[j][0], tokens[j][1]))
        steps.append(_build_step(keyword, args, pos))
        i += 1 + arity
        if i < len(tokens):
            sep, sep_pos, sep_col = tokens[i]
            if sep != ";":
                raise PipelineSyntaxError(f"expected ';', got {sep!r}", sep_pos, sep_col)
            i += 1
            if i == len(tokens):
                raise PipelineSyntaxError("empty step after ';'", sep_pos + 1)
    return PipelineSpec(tuple(steps), text)

