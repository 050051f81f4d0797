"""Combinatorics of grope trees, unitrivalent diagrams and clasper cleanup.

The package is organized around four layers:

* ``trees`` / ``graphs``: the data model (rooted trivalent trees, trees with
  boxes, unitrivalent multigraphs) together with degree functions,
  canonical forms and enumeration.
* ``refine`` / ``ihx``: the two rewriting engines (pushing genus boxes down
  to a sequence of genus-one trees, and rewriting arbitrary trees into
  caterpillars via local IHX moves).
* ``clasper``: an abstract-state simulator of the leaf cleanup algorithm
  with a lexicographic termination certificate.
* ``diagram_space`` / ``magnus``: exact integer linear algebra over diagram
  modules (Smith normal form) and the free-group Magnus expansion, both
  used as independent oracles for the rewriting engines.
"""

from .trees import (
    Tip,
    Join,
    Box,
    parse_tree,
    print_tree,
    class_of,
    is_half_grope,
    is_symmetric,
    gen_half,
    gen_symmetric,
    enumerate_trees,
)
from .graphs import (
    UnitrivalentGraph,
    CanonicalForm,
    vassiliev_degree,
    loop_degree,
    grope_degree,
    canonical_form,
    cut_edges,
    glue_tips,
    glue_graph_tips,
    tree_to_graph,
    graph_to_tree,
    enumerate_graphs,
    parse_graph,
    print_graph,
)
from .refinement import push_box_step, refine
from .ihx import SignedTree, chain_length, ihx_step, ihx_reduce
from .clasper import (
    LeafState,
    ClasperState,
    Complexity,
    InterferencePolicy,
    classify_leaf,
    complexity,
    zero_frame,
    unknot_step,
    zip_leaf,
    move_E,
    move_K,
    move_Cl,
    move_EK,
    move_EKCl,
    cleanup,
    verify_trace,
)
from .diagram_space import (
    DiagramVector,
    ModulePresentation,
    build_presentation,
    as_relations,
    ihx_relations,
    quotient,
    reduce_vector,
    is_zero_in_quotient,
    span_check,
)
from .lie_bridge import tree_to_bracket, magnus, lcs_degree, bracket_polynomial

__version__ = "0.1.0"
