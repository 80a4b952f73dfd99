"""Exact computations with standard modules of the rational Cherednik algebra of G(r,1,2)."""

from cherednik2.cyclo import (
    CycloNum,
    NotRationalError,
    cyclotomic_minimal_poly,
    power_sum,
    to_rational,
)
from cherednik2.labels import (
    Box,
    GroupElement,
    Label,
    Params,
    character,
    charged_content,
    enumerate_labels,
    w_act_on_rep,
)
from cherednik2.standard_module import ModElem

__all__ = [
    "Box",
    "CycloNum",
    "GroupElement",
    "Label",
    "ModElem",
    "NotRationalError",
    "Params",
    "character",
    "charged_content",
    "cyclotomic_minimal_poly",
    "enumerate_labels",
    "power_sum",
    "to_rational",
    "w_act_on_rep",
]
