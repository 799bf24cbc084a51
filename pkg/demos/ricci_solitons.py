"""The five-parameter soliton family: residuals, non-gradientness, harmonicity."""

import numpy as np

from geoverify import (
    Point,
    SolitonParams,
    closedness_defect,
    scalar_laplacian,
    soliton_field,
    soliton_residual,
)

params = SolitonParams(c1=1.0, c2=-2.0, c3=0.5, c4=3.0, c5=-1.0)
xi = soliton_field(params)
p = Point(0.7, -0.3, 1.2, 0.9)

## The soliton equation Ric + (1/2) L_xi g = lam g holds exactly at lam = -6 ...
res = soliton_residual(xi, -6.0, p)
print("residual at lam = -6 (should be ~0):")
print(np.round(res, 12))

## ... and fails for any other lam: the whole diagonal shifts by -(lam + 6).
res0 = soliton_residual(xi, 0.0, p)
print("\nresidual at lam = 0 (diagonal -6):")
print(np.round(res0, 12))

## No member of the family is a gradient field: the dual one-form is not
## closed.  For the c3 member the (s,t) component of d(xi-flat) is 1/(2 t^3).
xi3 = soliton_field(SolitonParams(c3=1.0))
for t in (1.0, 1.5, 2.0):
    q = Point(0.0, 0.0, 0.5, t)
    d = closedness_defect(xi3, q)
    print(f"\n(d xi-flat)_st at t={t}: {d[5]:.6f}   1/(2t^3) = {1/(2*t**3):.6f}")

## Each coordinate component of the field is a harmonic function.
print("\nLaplacians of the four components at p:")
print([round(scalar_laplacian(f, p), 12) for f in xi.components])
