"""Walk through the basic geometry of the chart: frame, connection, curvature.

Everything below is computed from jets of the metric; the integer tables
the prints compare against are reproduced, not assumed.
"""

import numpy as np

from geoverify import (
    Point,
    frame_connection,
    frame_matrix,
    metric_at,
    ricci_frame,
    riemann_frame,
    scalar_curvature,
)

p = Point(x=0.4, y=-1.1, s=0.8, t=1.6)

## The metric is block diagonal: an (x, y) block depending on (s, t), and
## two hyperbolic-plane entries 1/(4 t^2).
print("metric at p:")
print(np.round(metric_at(p), 6))

## The orthonormal frame straightens the metric out: rows are e1..e4.
E = frame_matrix(p)
print("\nframe Gram matrix (should be the identity):")
print(np.round(E @ metric_at(p) @ E.T, 12))

## The frame connection coefficients g(nabla_{e_i} e_j, e_k) are constant
## integers; print the nonzero ones.
fc = frame_connection(p)
print("\nnonzero connection coefficients g(nabla_{e_i} e_j, e_k):")
for i in range(4):
    for j in range(4):
        for k in range(4):
            if abs(fc[i, j, k]) > 1e-12:
                print(f"  (i,j,k) = ({i + 1},{j + 1},{k + 1}) -> {fc[i, j, k]:+.0f}")

## A few curvature components (1-based indices, matching the table labels).
print("\ncurvature samples:")
for idx in [(1, 2, 1, 2), (3, 4, 3, 4), (1, 3, 2, 4), (1, 2, 3, 4)]:
    print(f"  g(R(e{idx[0]},e{idx[1]})e{idx[2]},e{idx[3]}) = {riemann_frame(p, *idx):+.6f}")

## Ricci is diag(0, 0, -6, -6) at every point; scalar curvature -12.
print("\nRicci matrix:")
print(np.round(ricci_frame(p), 9))
print("scalar curvature:", round(scalar_curvature(p), 9))
