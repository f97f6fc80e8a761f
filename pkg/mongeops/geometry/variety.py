# mongeops/geometry/variety.py
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..exactalg import Ratio, perfect_square
from .types import MongeMetric

log = logging.getLogger(__name__)


@dataclass
class SingularVariety:
    det: Ratio
    degree: int
    square_part: Optional[Tuple[Ratio, Ratio]]

    @property
    def is_double(self) -> bool:
        """det g is a constant multiple of a square: the local case."""
        return self.square_part is not None


def singular_variety(metric: MongeMetric) -> SingularVariety:
    """det g, its total degree in the coordinates and its perfect-square decomposition."""
    d = metric.det
    result = SingularVariety(d, d.degree(), perfect_square(d))
    log.debug(f"[VARIETY] det g = {d}, degree {result.degree}, square: {result.is_double}")
    return result
