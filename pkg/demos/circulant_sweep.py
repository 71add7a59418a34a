"""
Circulant grids: closed form against the eigensolver, then a quadratic surface
"""

from gridstab.circulant import alpha2_closed_form, circulant_sweep, quadratic_fit

## A single point
print("n=7, k=2:", alpha2_closed_form(7, 2))

## Whole sweep over odd n up to 19
pts = circulant_sweep(19)
print(len(pts), "points, worst disagreement", max(p.abs_err for p in pts))
for p in pts:
    if p.n in (9, 19):
        print(f"n={p.n:2d} degree={p.degree:2d} alpha2={p.alpha2_closed:.6f}")

## Fit alpha2 as a quadratic in (n, degree)
surf = quadratic_fit([(p.n, p.degree, p.alpha2_closed) for p in pts])
print("coefficients [1, n, d, n^2, nd, d^2]:", surf.coefficients)
print("r^2 =", surf.r2)
print("prediction at n=21, d=10:", surf(21, 10), "exact:", alpha2_closed_form(21, 5))
