"""Harmonic sections and the tension obstruction to harmonic maps."""

import numpy as np

from geoverify import (
    CorollaryFamily,
    EXPONENT_MINUS,
    EXPONENT_PLUS,
    Point,
    constant_frame_field,
    coordinate_field,
    corollary_field,
    harmonic_map_residual,
    harmonic_section_residual,
    rough_laplacian,
)

p = Point(0.2, 0.9, -0.6, 1.3)

## Constant frame fields are not harmonic sections; their rough Laplacians
## are constant multiples of themselves.
for k, expect in ((0, -3.0), (2, -6.0)):
    X = constant_frame_field(np.eye(4)[k])
    print(f"rough Laplacian of e{k + 1}: {np.round(rough_laplacian(X, p), 9)} (component {expect})")

## The four single-direction families are harmonic sections for any (c1, c2).
print("\nharmonic-section residuals of the four families:")
for index in (1, 2, 3, 4):
    X = corollary_field(CorollaryFamily(index, c1=1.2, c2=-0.8))
    r = harmonic_section_residual(X, p)
    print(f"  family {index}: max |residual| = {np.max(np.abs(r)):.2e}")

## The exponents (3 +- sqrt 7)/2 in families 3 and 4 are forced: nudging one
## by 0.01 leaves a visible residual.
print(f"\nexponents: {EXPONENT_PLUS:.6f}, {EXPONENT_MINUS:.6f}")
zero = lambda x, y, s, t: 0.0
bad = coordinate_field(zero, zero, lambda x, y, s, t: t ** (EXPONENT_PLUS + 0.01), zero)
print("perturbed exponent residual:", np.max(np.abs(harmonic_section_residual(bad, p))))

## As maps into the tangent bundle, all of these fail: the horizontal
## (curvature) part of the tension never vanishes for a nonzero field.
print("\ntension of family 3 (harmonic section, not a harmonic map):")
tv = harmonic_map_residual(corollary_field(CorollaryFamily(3, 1.0, 0.0)), p)
print("  vertical  :", np.round(tv.vertical, 9))
print("  horizontal:", np.round(tv.horizontal, 6))

print("\ntension of the zero field (the only harmonic map):")
tv = harmonic_map_residual(constant_frame_field([0, 0, 0, 0]), p)
print("  vertical  :", tv.vertical, " horizontal:", tv.horizontal)
