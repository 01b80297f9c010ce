"""Generalized Bell and Stirling numbers B_{m,m}(n), S_{m,m}(n,k).

Counts colourings of disjoint unions of cliques and (n,m)-labelled Eulerian
digraphs, with the bijection between the two.
"""
from .clique_colourings import (
    CliqueFamily,
    Colouring,
    Vertex,
    build_family,
    enumerate_all_colourings,
    enumerate_colourings,
    is_proper,
    iter_colourings,
)
from .eulerian_digraphs import (
    LabelledEulerianDigraph,
    PathSystem,
    canonicalize,
    colouring_to_digraph,
    digraph_to_colouring,
    enumerate_digraphs,
    from_paths,
    iter_digraphs,
    to_dot,
    to_paths,
    validate,
)
from .exact_numbers import (
    bell_mm,
    binomial,
    count_colourings_mixed,
    dobinski_bell,
    falling_factorial,
    gen_dobinski,
    gen_stirling_row,
    lah,
    stirling_mm,
    stirling_mm_blasiak,
)

__version__ = "0.1.0"
