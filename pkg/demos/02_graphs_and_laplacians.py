"""Multigraph constructions and exact Laplacians.

The C4 x Cn family is n four-cycle layers joined ring-to-ring; vertex
(layer i, position j) is encoded as 4*i + j.
"""

from critgraph import (
    Multigraph,
    c4xcn,
    cartesian_product,
    cycle,
    det_bareiss,
    laplacian,
)

g = cycle(5)
print(f"cycle(5): {g.vertex_count} vertices, {g.edge_count} edges,",
      "degrees", [g.degree(v) for v in range(5)])

prism = c4xcn(3)
print(f"c4xcn(3): {prism.vertex_count} vertices, {prism.edge_count} edges, 4-regular:",
      all(prism.degree(v) == 4 for v in range(12)))

print("\nc4xcn agrees with the generic Cartesian product under the same encoding:")
for n in (3, 5, 8, 13):
    same = c4xcn(n) == cartesian_product(cycle(4), cycle(n))
    print(f"  n={n}: {same}")

print("\nLaplacian of the triangle:")
print(laplacian(cycle(3)))

double = Multigraph(2, {(0, 1): 2})
print("\nLaplacian with a double edge:")
print(laplacian(double))

# Matrix-tree: delete any one row and column, take the determinant.
reduced = laplacian(prism).delete_row_col(0, 0)
print(f"\nspanning trees of c4xcn(3) via the reduced determinant: {det_bareiss(reduced)}")
print("spanning trees of cycle(n) is n:",
      [det_bareiss(laplacian(cycle(n)).delete_row_col(0, 0)) for n in range(3, 9)])
