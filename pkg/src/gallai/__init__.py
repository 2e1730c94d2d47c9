"""Connected edge-colourings of complete graphs and hypergraphs:
constructions, connectivity verifiers, multicoloured-set counters, and
desk-scale exhaustive searches."""

from .core import (Certificate, ColourSetFamily, ConstructionError,
                   EdgeColouring, Hypergraph, InvalidColouringError,
                   colour_class, decode_colouring, encode_colouring,
                   rank_subset, read_colouring, subsets_colex, unrank_subset,
                   write_colouring)
from .graphs import (DoublingHypotheses, blow_up, check_doubling_hypotheses,
                     cyclic_prime_colouring, delete_vertex, double_extension,
                     paths_colouring, upper_bound_pipeline)
from .hypergraphs import (covering_4graph_colouring, covering_blowup,
                          k17_colouring, minimal_connected_3graph,
                          monochromatic, parity_covering_2colouring,
                          pointwise_cycles_colouring, strong_blowup, type_of)
from .search import (SearchReport, min_connected_3graph_edges,
                     min_multicoloured_triangles, min_partition_family,
                     tricoloured_counterexample_hunt, unreduced_min_triangles)
from .verify import (ConnectivityNotion, classes_isomorphic_under,
                     is_class_connected, is_connected, link_connectivity_profile,
                     max_colours_on_d_set, multicoloured_family,
                     partition_condition, strong_path, three_partitions,
                     tricoloured_count)

__all__ = [
    "Certificate", "ColourSetFamily", "ConnectivityNotion", "ConstructionError",
    "DoublingHypotheses", "EdgeColouring", "Hypergraph", "InvalidColouringError",
    "SearchReport", "blow_up", "check_doubling_hypotheses",
    "classes_isomorphic_under", "colour_class", "covering_4graph_colouring",
    "covering_blowup", "cyclic_prime_colouring", "decode_colouring",
    "delete_vertex", "double_extension", "encode_colouring", "is_class_connected",
    "is_connected", "k17_colouring", "link_connectivity_profile",
    "max_colours_on_d_set", "min_connected_3graph_edges",
    "min_multicoloured_triangles", "min_partition_family",
    "minimal_connected_3graph", "monochromatic", "multicoloured_family",
    "parity_covering_2colouring", "partition_condition", "paths_colouring",
    "pointwise_cycles_colouring", "rank_subset", "read_colouring",
    "strong_blowup", "strong_path", "subsets_colex", "three_partitions",
    "tricoloured_count", "tricoloured_counterexample_hunt",
    "type_of", "unrank_subset", "unreduced_min_triangles",
    "upper_bound_pipeline", "write_colouring",
]

__version__ = "0.1.0"
