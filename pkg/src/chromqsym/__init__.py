"""Chromatic quasisymmetric functions of labeled graphs in the monomial basis,
ribbon-diagram tools for labeled paths, and finite verification harnesses."""
from chromqsym.engine import (
    ascent_number,
    colorings_with_palette,
    cqf,
    cqf_descent,
    cqf_fast,
    cqf_oracle,
    descent_number,
    palette_coefficient,
)
from chromqsym.graph import (
    LabeledGraph,
    ad_pattern,
    bipartition,
    chromatic_polynomial_value,
    flip,
    make_path,
    make_star,
)
from chromqsym.qsym import (
    Composition,
    QPolynomial,
    QSymExpansion,
    chromatic_from_expansion,
    compositions_of,
    is_palindromic,
    is_symmetric,
    reverse,
    rho,
    specialize_q,
)
from chromqsym.ribbon import RibbonDiagram, RibbonTableau, corners, reflect, ribbon_from_pattern

__version__ = "0.1.0"
