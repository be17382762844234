"""Parsing, validation, replay, and serialization of simplex-wise zigzag filtrations.

Text format: UTF-8 lines; `#` comment lines and blank lines ignored; every other
line is `i v1 v2 ... vk` (insert) or `d v1 v2 ... vk` (delete) with strictly
increasing decimal vertex ids; newline is `\\n`.  Arrow i connects complex K_i to
K_{i+1}; replay starts from the empty complex K_0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

from .chains import ComplexState, Simplex

INSERT = "i"
DELETE = "d"


class FiltrationError(ValueError):
    """Malformed filtration text or an illegal step during replay."""


@dataclass(frozen=True)
class FiltrationStep:
    op: str
    simplex: Simplex

    def __post_init__(self):
        if self.op not in (INSERT, DELETE):
            raise ValueError(f"op must be {INSERT!r} or {DELETE!r}, got {self.op!r}")
        if not isinstance(self.simplex, Simplex):
            object.__setattr__(self, "simplex", Simplex(self.simplex))


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    m: int
    n: int
    arrow: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


class ZigzagFiltration:
    """An immutable sequence of insert/delete steps; len() is the number of arrows m."""

    __slots__ = ("steps",)

    steps: Tuple[FiltrationStep, ...]

    def __init__(self, steps=()):
        object.__setattr__(self, "steps", tuple(
            s if isinstance(s, FiltrationStep) else FiltrationStep(*s) for s in steps
        ))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[FiltrationStep]:
        return iter(self.steps)

    def __getitem__(self, index) -> Union[FiltrationStep, "ZigzagFiltration"]:
        if isinstance(index, slice):
            return ZigzagFiltration(self.steps[index])
        return self.steps[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZigzagFiltration):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def __setattr__(self, name, value):
        raise AttributeError("ZigzagFiltration is immutable")

    def __repr__(self) -> str:
        return f"ZigzagFiltration({len(self.steps)} steps)"


def parse_filtration(text: Union[str, bytes]) -> ZigzagFiltration:
    """Parse filtration text; does not validate replay legality (see validate)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    steps: List[FiltrationStep] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] not in (INSERT, DELETE):
            raise FiltrationError(f"line {lineno}: unknown op tag {tokens[0]!r}")
        if len(tokens) < 2:
            raise FiltrationError(f"line {lineno}: no vertices given")
        try:
            vertices = [int(t) for t in tokens[1:]]
        except ValueError:
            raise FiltrationError(f"line {lineno}: non-integer vertex in {line!r}") from None
        try:
            simplex = Simplex(vertices)
        except ValueError as exc:
            raise FiltrationError(f"line {lineno}: {exc}") from None
        steps.append(FiltrationStep(tokens[0], simplex))
    return ZigzagFiltration(steps)


def serialize(f: ZigzagFiltration) -> str:
    """Canonical text for a filtration; parse_filtration round-trips it."""
    return "".join(
        f"{step.op} {' '.join(map(str, step.simplex))}\n" for step in f
    )


def _replay_step(state: ComplexState, step: FiltrationStep, arrow: int) -> None:
    if step.op == INSERT:
        state.insert(step.simplex, arrow)
    else:
        state.delete(step.simplex)


def validate(f: ZigzagFiltration) -> ValidationResult:
    """Replay all steps from the empty complex; report legality, m, and n.

    n is the maximum complex size reached during the replay.
    """
    state = ComplexState()
    n = 0
    for arrow, step in enumerate(f):
        try:
            _replay_step(state, step, arrow)
        except ValueError as exc:
            return ValidationResult(False, len(f), n, arrow=arrow, reason=str(exc))
        n = max(n, len(state))
    return ValidationResult(True, len(f), n)


def complex_at(f: ZigzagFiltration, j: int) -> ComplexState:
    """The replayed complex K_j (0 <= j <= m), with live ids as assigned by replay."""
    if not 0 <= j <= len(f):
        raise FiltrationError(f"complex index {j} out of range [0, {len(f)}]")
    state = ComplexState()
    for arrow in range(j):
        step = f[arrow]
        try:
            _replay_step(state, step, arrow)
        except ValueError as exc:
            raise FiltrationError(f"arrow {arrow}: {exc}") from None
    return state
