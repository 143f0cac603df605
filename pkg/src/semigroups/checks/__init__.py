from .base_check import BUG, CAP, FAIL, PASS, SKIP, BaseCheck
from .corpus_checks import (
    CHECKS,
    AxiomsCheck,
    ConesCheck,
    FundamentalCheck,
    ProperCheck,
    RoundtripCheck,
    SandwichCheck,
    PseudoInverseCheck,
    make_check,
)
