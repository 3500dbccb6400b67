"""
Domain entities
"""

from .geometry import IDENTITY, Matrix, Point
from .label import LabelRecord
from .relabel import Directive, ExtraLabel, Length, Relabel, RelabelSpec

__all__ = [
    'IDENTITY', 'Matrix', 'Point', 'LabelRecord',
    'Directive', 'ExtraLabel', 'Length', 'Relabel', 'RelabelSpec',
]
