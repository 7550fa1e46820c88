"""Generalized book graphs ``B_q^(r) = K_r + q K_1`` and Ramsey numbers
``r(K_{p+1}, B_q^(r))``: exact book sizes, the low-degree deletion
algorithm and its constants, regularity-pair checks, exhaustive small
Ramsey certificates and the probabilistic lower bound."""

from .cliques import (
    BookMeasure,
    book_size,
    contains_book,
    count_cliques,
    count_independent_rsets,
    degree_square_bound,
    find_clique,
    triangle_identity,
    turan_edge_max,
)
from .graph import (
    Graph,
    Graph6Error,
    VertexSet,
    common_neighbors,
    complement,
    complete,
    complete_multipartite,
    cycle,
    empty,
    induced,
    parse_graph6,
    serialize_graph6,
    turan_graph,
)

__version__ = "0.1.0"
