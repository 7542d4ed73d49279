"""Group-like elements, skew-primitives and the pointed criterion."""

from src.pointed.grouplikes import GroupLikeSet, find_grouplikes, is_grouplike, verify_grouplikes
from src.pointed.primitives import (
    PointedVerdict, SkewPrimitiveSpace, pointed_criterion, skew_primitives
)
