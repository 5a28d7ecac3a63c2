"""Rectangular tableau dynamics, multicolored noncrossing matchings and
sl_n web graphs. Thin wrapper over the C++ core."""

from ._webvac import (
    WebvacError,
    complement,
    count_syt,
    enumerate_syt,
    evacuate,
    evacuate_fast,
    flip_web_text,
    is_standard_rectangular,
    ncm_arcs,
    ncm_text,
    promote,
    reflect_ncm,
    reflect_web_text,
    render_ncm,
    render_web,
    rotate180,
    tableau_from_ncm,
    validate,
    verify_shape,
    web_text,
    webs_equal,
)

__all__ = [
    "WebvacError",
    "complement",
    "count_syt",
    "enumerate_syt",
    "evacuate",
    "evacuate_fast",
    "flip_web_text",
    "is_standard_rectangular",
    "ncm_arcs",
    "ncm_text",
    "promote",
    "reflect_ncm",
    "reflect_web_text",
    "render_ncm",
    "render_web",
    "rotate180",
    "tableau_from_ncm",
    "validate",
    "verify_shape",
    "web_text",
    "webs_equal",
]
