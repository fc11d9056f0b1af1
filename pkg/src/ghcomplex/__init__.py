"""Biordered sets, Graham-Houghton complexes and the maximal subgroups of
free idempotent generated semigroups, computed on finite semigroups of
partial maps."""

__version__ = "0.1.0"

from .biorder import (Biorder, EChain, ESquare, SingularizationWitness,
                      canonical_square, canonicalize_e_path, chain_element,
                      enumerate_squares, extract_biorder, is_regular_biorder,
                      sandwich_set, singularizers, square_census)
from .complexes import (ComplexComponent, SurfaceType, TwoComplex,
                        complex_json, components, components_and_euler,
                        export_dot, gh_complex, nambooripad_complex,
                        surface_classify)
from .errors import (CapExceeded, DegreeMismatch, GHComplexError,
                     NoIdempotents, NotAnEPath, NotASquare, NotIdempotent,
                     NotRegularElement, NotZeroSimple, ParseError,
                     VerificationMismatch, VertexNotFound)
from .incidence import (BipartiteGraph, IncidenceSystem, ReesLabels,
                        bipartite_graph, canonical_matrix, format_incidence,
                        incidence_from_rows, incidence_of_dclass,
                        matrices_equivalent, parse_incidence, rees_semigroup)
from .partial_maps import (PartialMap, compose, constant_map, empty_map,
                           format_partial_maps, identity_map,
                           is_idempotent_map, parse_partial_maps, total_map)
from .presentations import (AbelianInvariants, GroupPresentation, abelianize,
                            cyclic_reduce, format_presentation, free_reduce,
                            graph_free_rank, parse_presentation,
                            presentation_at, relator_matrix,
                            smith_normal_form, spanning_tree, tietze_simplify)
from .repro import (PaperFixture, build_paper_generators,
                    named_paper_generators, paper_fixture, paper_indices,
                    paper_semigroup, reproduce_paper)
from .semigroups import (DEFAULT_CAP, FiniteSemigroup, GreenData,
                         QuasiOrderFlags, generate, green, idempotents,
                         maximal_subgroup, quasi_orders, regularity)
