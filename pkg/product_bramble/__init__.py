"""The product bramble and its refuter."""

from product_bramble.refuter import (
    AvoidingElement,
    RefutationOutcome,
    SizeCertificate,
    refute_hitting_set,
)
from product_bramble.theorem import (
    ElementSpec,
    make_element,
    q_graph_check,
    theorem_bound,
    touching_certificate,
)

__all__ = [
    "AvoidingElement",
    "ElementSpec",
    "RefutationOutcome",
    "SizeCertificate",
    "make_element",
    "q_graph_check",
    "refute_hitting_set",
    "theorem_bound",
    "touching_certificate",
]
