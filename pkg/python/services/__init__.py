"""
服务层
通用机器、机器构造、码字普查与校验
"""
from .universal_service import (
    Budgets, BudgetedUniversal, ComplexityEstimate,
    SemiMeasureEstimate, UniversalService, run_u,
)
from .census_service import CensusService, CensusTable
from .transform_service import FinitePreimageResult, TransformService
from .verification_service import CheckResult, VerificationService

__all__ = [
    "Budgets", "BudgetedUniversal", "ComplexityEstimate",
    "SemiMeasureEstimate", "UniversalService", "run_u",
    "CensusService", "CensusTable",
    "FinitePreimageResult", "TransformService",
    "CheckResult", "VerificationService",
]
