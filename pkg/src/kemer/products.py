"""
Kemer sets of direct products: the product's bounded estimate must be the
set of maximal points among the factors' estimates.
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import List, Optional, Sequence

from src.algebras.constructors import direct_product
from src.algebras.models import GradedAlgebra
from src.core.models import ValidationError
from src.kemer.models import KemerPoint, LowerBound, SearchParams, maximal_points
from src.kemer.search import kemer_lower_bound, kemer_upper_bound
from src.logger import logger


@dataclass
class ProductCheck:
    product: GradedAlgebra
    product_lower: LowerBound
    product_upper: KemerPoint
    factor_lowers: List[LowerBound] = field(default_factory=list)
    factor_uppers: List[KemerPoint] = field(default_factory=list)
    maximal_factor_points: List[KemerPoint] = field(default_factory=list)
    dominated_factor_points: List[KemerPoint] = field(default_factory=list)
    passes: bool = False

    @property
    def budget_exhausted(self) -> bool:
        return self.product_lower.budget_exhausted or any(f.budget_exhausted for f in self.factor_lowers)


def kemer_set_product_check(factors: Sequence[GradedAlgebra],
                            params: Optional[SearchParams] = None) -> ProductCheck:
    """Bounded Kemer estimates of the product and of each factor, compared."""
    if not factors:
        raise ValidationError("product check needs at least one factor")
    if any(F.group != factors[0].group for F in factors):
        raise ValidationError("all factors must share the grading group")
    params = params or SearchParams()
    P = reduce(direct_product, factors)
    logger.info(f"🔍 Kemer product check on {len(factors)} factors, product {P!r}")

    lowers = [kemer_lower_bound(F, params) for F in factors]
    points: List[KemerPoint] = [p for low in lowers for p in low.maximal]
    maximal = maximal_points(points)
    dominated = [p for p in dict.fromkeys(points) if p not in maximal]
    product_lower = kemer_lower_bound(P, params)
    passes = set(product_lower.maximal) == set(maximal)
    if passes:
        logger.info(f"✅ product Kemer set {product_lower.maximal} matches the maximal factor points")
    else:
        logger.warning(f"❌ product Kemer set {product_lower.maximal} differs from {maximal}")
    return ProductCheck(product=P, product_lower=product_lower, product_upper=kemer_upper_bound(P),
                        factor_lowers=lowers, factor_uppers=[kemer_upper_bound(F) for F in factors],
                        maximal_factor_points=maximal, dominated_factor_points=dominated, passes=passes)
