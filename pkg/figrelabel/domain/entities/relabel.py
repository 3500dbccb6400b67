"""
Relabel spec domain entities.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math
from typing import Optional, Tuple, Union

from figrelabel.core.constants import DEFAULT_FONT_NAME, DEFAULT_FONT_SIZE_BP

# bp per unit as exact ratios; truein equals in because no magnification exists here
UNIT_FACTORS = {
    "bp": Fraction(1),
    "pt": Fraction(7200, 7227),
    "in": Fraction(72),
    "truein": Fraction(72),
    "cm": Fraction(7200, 254),
    "mm": Fraction(720, 254),
}


@dataclass(frozen=True)
class Length:
    """A typographic length that remembers the unit it was written in."""

    value: float
    unit: str = "pt"

    @property
    def bp_value(self) -> float:
        """Value in bp, rounded once from the exact decimal product."""
        factor = UNIT_FACTORS[self.unit]
        if not math.isfinite(self.value):
            return self.value * float(factor)
        return float(Fraction(repr(self.value)) * factor)

    @classmethod
    def zero(cls) -> "Length":
        return cls(0.0, "pt")


@dataclass(frozen=True)
class Relabel:
    """Replace the figure label `old` with `new`, shifted by (dx, dy)."""

    old: bytes
    new: str
    dx: Length = field(default_factory=Length.zero)
    dy: Length = field(default_factory=Length.zero)
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class ExtraLabel:
    """Free-floating text placed relative to the figure's lower-right corner."""

    x: Length
    y: Length
    text: str
    line: Optional[int] = field(default=None, compare=False)


Directive = Union[Relabel, ExtraLabel]


@dataclass(frozen=True)
class RelabelSpec:
    """Everything one figure block asks for, in source order."""

    figure: str
    width: Optional[Length] = None
    font_name: str = DEFAULT_FONT_NAME
    font_size: Length = field(default_factory=lambda: Length(DEFAULT_FONT_SIZE_BP, "bp"))
    directives: Tuple[Directive, ...] = ()

    @property
    def relabels(self) -> Tuple[Relabel, ...]:
        return tuple(d for d in self.directives if isinstance(d, Relabel))

    @property
    def extra_labels(self) -> Tuple[ExtraLabel, ...]:
        return tuple(d for d in self.directives if isinstance(d, ExtraLabel))
