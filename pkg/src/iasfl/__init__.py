"""Integer additive set-labelings of graphs, with a focus on set-filtered labelings."""

from .errors import EmptyLabelError, GroundViolation, InputError, NotAnIASFL, NotAnIASL, ScaleGuardError
from .graph import Graph, ShapeReport, graph_shape, parse_graph
from .labeling import (
    ClassificationReport,
    Labeling,
    classify,
    extract_chain,
    induced_edge_labels,
    make_trivial_iasl,
    parse_labeling,
    validate_iasl,
)
from .search import (
    OracleResult,
    SearchResult,
    build_max_iasf_graph,
    enumerate_labelings,
    search_iasfl,
)
from .setcore import IntSet, SetFamily, Verdict, difference_set, is_ap_set, is_filter, is_topology, sumset
from .theorems import SuiteConfig, run_theorem_suite

__version__ = "0.1.0"
