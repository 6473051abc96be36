"""Path-count matrices, Smith normal forms and frieze patterns of d-angulations."""

from .exactla import SmithDecomposition, determinant, smith_normal_form, special_matrix, verify_divisor_theorem
from .frieze import FriezePattern, HingeWitness, classify_minors, hinge_sequence, minor, render_frieze
from .matrix import PathMatrix, glue_matrix, matrix_fast, matrix_glued, quiddity_row
from .paths import DPath, count_dpaths, enumerate_dpaths, matrix_bruteforce
from .polygon import (
    DAngulation,
    Face,
    boundary_faces,
    build_dangulation,
    cut_boundary_face,
    enumerate_dangulations,
    fuss_catalan,
    parse_dangulation,
)

__version__ = "0.1.0"
