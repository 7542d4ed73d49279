"""
Container for a built Hopf algebra and its companion data.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from src.builders.groups import GroupTable
from src.hopf.structure import HopfAlgebraData
from src.pointed.grouplikes import GroupLikeSet


@dataclass(frozen=True)
class HopfExample:
    """
    A validated Hopf algebra with its group-likes and simple comodules.

    comodules lists the known simple comodules of dimension > 1; group is the
    table a group or function algebra was built from; parameters records
    the builder arguments.
    """
    hopf: HopfAlgebraData
    grouplikes: GroupLikeSet
    comodules: Tuple = ()
    group: Optional[GroupTable] = None
    parameters: Dict[str, Any] = field(default_factory=dict, compare=False)
    notes: Tuple[str, ...] = ()

    @property
    def ctx(self):
        return self.hopf.ctx

    @property
    def dim(self) -> int:
        return self.hopf.dim
