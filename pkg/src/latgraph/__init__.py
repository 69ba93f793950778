"""Graphs of finite bounded semilattices.

Build the graph whose vertices are the elements strictly between bottom and
top, adjacent when their meet is not the bottom; measure it; and sweep the
known structural statements about it over every small lattice.
"""

from .enumeration import (
    CapExceeded,
    canonical_form,
    canonical_table,
    enumerate_chain_product_specs,
    enumerate_lattices,
)
from .graph import (
    SimpleGraph,
    build_graph,
    classify_shape,
    connected_components,
    degree,
    degree_sequence,
    diameter,
    euler_tour,
    export_dot,
    girth,
    is_connected,
    is_eulerian,
    is_planar,
    metrics,
)
from .lattice import is_distributive, is_dually_atomic, is_modular, join
from .products import ChainProductSpec, ProductPoint, chain_product, product_degree_formula
from .semilattice import (
    InvalidMeetTable,
    MeetTable,
    SemilatticeError,
    atoms,
    chain,
    check_axioms,
    dual_atoms,
    from_json,
    induced_order,
    is_artinian,
    to_json,
    validate,
    zero_divisors,
)
from .theorems import run_suite, suite_ok

__version__ = "0.1.0"
