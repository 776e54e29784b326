"""Switching rook polynomials and domino-stability of collections of cells."""

from .analysis import VerificationReport, is_palindromic, verify, verify_corpus
from .enumerate import (canonical_form, count_shapes, enumerate_collections,
                        enumerate_polyominoes)
from .formats import dump_shape, parse_shape, parse_text, read_shape
from .geometry import (Cell, CellCollection, CellRect, gluing, inner_interval,
                       is_domino_stable, maximal_rectangles, normalize, residues,
                       runs, stable_squares, strong_components, weak_components)
from .rook import (SwitchingPolynomial, attacking, canonical_in_rectangle,
                   canonicalize, class_count, configs, rook_number,
                   square_complement, switch_neighbors, switching_polynomial,
                   top_config)

__version__ = "0.1.0"
