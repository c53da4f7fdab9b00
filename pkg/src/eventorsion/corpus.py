"""Line-delimited corpus records for sweeps, samples, and verification.

One JSON object per line, fixed key order (m, n, D, class, witness,
generator_x, generator_y, oracle_order, agree), every integer serialized as
a decimal string so no consumer word size can truncate it.  A witness is
"TAG:p1,p2,..." or null.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .classifier import (
    ClassificationReport,
    Witness,
    WitnessI,
    WitnessII,
    WitnessIII,
    WitnessIV,
    WitnessV,
)

_WITNESS_TYPES = {
    "I": WitnessI,
    "II": WitnessII,
    "III": WitnessIII,
    "IV": WitnessIV,
    "V": WitnessV,
}

FIELD_ORDER = (
    "m",
    "n",
    "D",
    "class",
    "witness",
    "generator_x",
    "generator_y",
    "oracle_order",
    "agree",
)


class CorpusFormatError(ValueError):
    """A corpus line does not parse as a record."""


def witness_token(witness: Optional[Witness]) -> Optional[str]:
    if witness is None:
        return None
    return f"{witness.tag}:{','.join(str(p) for p in witness.params)}"


def witness_from_token(token: Optional[str]) -> Optional[Witness]:
    if token is None:
        return None
    try:
        tag, joined = token.split(":", 1)
        params = [int(p) for p in joined.split(",")]
        return _WITNESS_TYPES[tag](*params)
    except (ValueError, KeyError, TypeError) as exc:
        raise CorpusFormatError(f"bad witness token {token!r}") from exc


@dataclass(frozen=True)
class CorpusRecord:
    m: int
    n: int
    D: int
    cls: str
    witness: Optional[Witness]
    generator_x: int
    generator_y: int
    oracle_order: Optional[int]
    agree: Optional[bool]

    @classmethod
    def from_report(cls, report: ClassificationReport) -> "CorpusRecord":
        gen = report.generator
        return cls(
            m=report.curve.m,
            n=report.curve.n,
            D=report.curve.D,
            cls=report.cls.label,
            witness=report.cls.witness,
            generator_x=_exact_int(gen.x),
            generator_y=_exact_int(gen.y),
            oracle_order=None if report.oracle_group is None else report.oracle_group.order,
            agree=report.agree,
        )

    def to_line(self) -> str:
        payload = {
            "m": str(self.m),
            "n": str(self.n),
            "D": str(self.D),
            "class": self.cls,
            "witness": witness_token(self.witness),
            "generator_x": str(self.generator_x),
            "generator_y": str(self.generator_y),
            "oracle_order": None if self.oracle_order is None else str(self.oracle_order),
            "agree": self.agree,
        }
        return json.dumps(payload, separators=(", ", ": "))

    @classmethod
    def from_line(cls, line: str) -> "CorpusRecord":
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"not valid JSON: {line!r}") from exc
        if not isinstance(payload, dict) or set(payload) != set(FIELD_ORDER):
            raise CorpusFormatError(f"unexpected fields in {line!r}")
        try:
            return cls(
                m=int(payload["m"]),
                n=int(payload["n"]),
                D=int(payload["D"]),
                cls=payload["class"],
                witness=witness_from_token(payload["witness"]),
                generator_x=int(payload["generator_x"]),
                generator_y=int(payload["generator_y"]),
                oracle_order=(
                    None if payload["oracle_order"] is None else int(payload["oracle_order"])
                ),
                agree=payload["agree"],
            )
        except (ValueError, TypeError) as exc:
            raise CorpusFormatError(f"bad record values in {line!r}") from exc


def _exact_int(value) -> int:
    if value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return value.numerator
