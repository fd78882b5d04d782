"""Melnikov's discrete capacity and its relation to the true capacity.

For centers Z and radius r, lambda(Z, r) is a pure linear-algebra quantity
(a Cauchy-matrix solve) that sandwiches the capacity of the disk union when
the doubled disks are disjoint, and admits the polynomial bracket
n r - alpha r^3 <= lambda <= n r - alpha r^3 + beta r^5.
"""

import anacap as ac

Z = (0 + 0j, 3 + 0j, 1.5 + 2.5j, -1 + 3j)
r = 0.25

rep = ac.discrete_report(ac.DiskConfiguration(Z, r, m=2))
print(f"centers: {Z}")
print(f"radius : {r}")
print(f"lambda       = {rep.lam:.15f}")
print(f"poly bracket = [{rep.poly_lower:.15f}, {rep.poly_upper:.15f}]")
print(f"alpha        = {rep.alpha:.15f}   (geometric form: "
      f"{ac.alpha_geometric(Z):.15f})")
print(f"beta         = {rep.beta:.15f}")
print(f"delta (m=2)  = {rep.delta:.15f}")
print(f"M, N         = {rep.M:.3e}, {rep.N:.3e}")

gb = ac.gamma_bounds(ac.scene([ac.Disk(z, r) for z in Z]), ac.Rings(3))
print(f"\ncapacity bracket gamma = [{gb.lower:.12f}, {gb.upper:.12f}]")
ok = ac.sandwich_check(Z, r, gb.lower, gb.upper, slack=gb.slack)
print(f"sandwich gamma/(1+4N) <= lambda <= (1+2M) gamma : {'holds' if ok else 'FAILS'}")

print("\nsmall-radius ratio slope (split m=2):")
print(f"predicted delta/n = {ac.predicted_slope(Z, 2):.6f}")
report = ac.asymptotic_check(Z, 2, ac.Rings(3))
print(f"fitted from sweeps = {report.fitted_slope:.6f} "
      f"(rel. deviation {report.rel_deviation:.2%})")
