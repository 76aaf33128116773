"""The dichotomy: n^k chi(n), eventual vanishing, or a finite transcendence witness."""
from .budget import SearchBudget
from .growth import (ArchGrowthReport, PadicGrowthReport, growth_check_arch, growth_check_padic,
                     padic_valuation)
from .report import VERDICTS, ClassificationReport, classify
from .search import (STAGE_WINDOW, TranscendenceWitness, declension_check, detect_eventually_zero,
                     detect_sarkozy, transcendence_witness)
from .verify import refute_cell, verify_witness

__all__ = [
    "SearchBudget", "ArchGrowthReport", "PadicGrowthReport", "growth_check_arch", "growth_check_padic",
    "padic_valuation", "VERDICTS", "ClassificationReport", "classify", "STAGE_WINDOW",
    "TranscendenceWitness", "declension_check", "detect_eventually_zero", "detect_sarkozy",
    "transcendence_witness", "refute_cell", "verify_witness",
]
