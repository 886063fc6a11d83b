"""Exact enumeration of total cyclic orders with prescribed triple turns.

The package counts, in polynomial time and exact integer arithmetic, the
total cyclic orders on {1, ..., n} whose consecutive triples (i, i+1, i+2)
turn in prescribed directions, optionally also prescribing the turns of the
wrap-around triples (n-1, n, 1) and (n, 1, 2).  A factorial-time oracle, an
explicit bijection onto permutation descent classes, and three independent
implementations of the core operator keep everything cross-checked.
"""

from .bijection import (
    entringer_by_content,
    insert_last,
    order_to_permutation,
    permutation_to_order,
    shrink,
    split_last,
    transport_holds,
)
from .boustrophedon import (
    METHODS,
    arc_pair,
    arc_tetrahedra,
    arc_triangles,
    count_arrangement,
    count_double_wrap,
    count_pattern,
    count_wrap,
    descent_class_count,
    descent_class_row,
    entringer_triangle,
    euler_number,
    seidel_triangles,
)
from .densities import (
    ConjectureReport,
    DensityRow,
    arrangement_limits,
    conjecture_report,
    density_rows,
    fraction_decimal,
)
from .oracle import (
    WordCounts,
    all_cyclic_orders,
    arrangement_index,
    classify_all,
    count_descent_class_brute,
    enumeration_limit,
    orders_with_pattern,
    refined_tetra_counts,
    refined_triangle_counts,
)
from .orders import (
    MINUS,
    PLUS,
    CyclicOrder,
    check_permutation,
    check_sign_word,
    descent_pattern,
    flip_even_signs,
)
from .polynomials import (
    HomoPoly,
    arc_insertion,
    arc_insertion_fast,
    arc_insertion_indexed,
    compositions,
    format_triangle,
    poly_from_json,
    poly_to_json,
    source_indices,
)

__version__ = "0.1.0"

__all__ = [
    "CyclicOrder",
    "ConjectureReport",
    "DensityRow",
    "HomoPoly",
    "METHODS",
    "MINUS",
    "PLUS",
    "WordCounts",
    "all_cyclic_orders",
    "arc_insertion",
    "arc_insertion_fast",
    "arc_insertion_indexed",
    "arc_pair",
    "arc_tetrahedra",
    "arc_triangles",
    "arrangement_index",
    "arrangement_limits",
    "check_permutation",
    "check_sign_word",
    "classify_all",
    "compositions",
    "conjecture_report",
    "count_arrangement",
    "count_descent_class_brute",
    "count_double_wrap",
    "count_pattern",
    "count_wrap",
    "density_rows",
    "descent_class_count",
    "descent_class_row",
    "descent_pattern",
    "entringer_by_content",
    "entringer_triangle",
    "enumeration_limit",
    "euler_number",
    "flip_even_signs",
    "format_triangle",
    "fraction_decimal",
    "insert_last",
    "order_to_permutation",
    "orders_with_pattern",
    "permutation_to_order",
    "poly_from_json",
    "poly_to_json",
    "refined_tetra_counts",
    "refined_triangle_counts",
    "seidel_triangles",
    "shrink",
    "source_indices",
    "split_last",
    "transport_holds",
]
