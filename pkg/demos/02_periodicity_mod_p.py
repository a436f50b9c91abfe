# %% [markdown]
# F_n(P) mod p is periodic with period r*s, r the order of P mod p.

# %%
from edslab.curve import WeierstrassCurve
from edslab.divpoly import NetContext, division_values
from edslab.periodicity import find_period, symmetry_constants, verify_symmetry

E = WeierstrassCurve(0, 0, 1, -1, 0)
P = E.point(0, 0)

for p in (5, 7, 11, 13, 23):
    cert = find_period(E, P, p)
    print(p, cert.to_json())

# %% the units a, b: F_{kr+n} = a^(kn) b^(k^2) F_n mod p
a, b = symmetry_constants(E, P, 5)
print("p = 5: a =", a, " b =", b, " check:", bool(verify_symmetry(E, P, 5, 10, 20)))

vals = [int(v) % 5 for v in division_values(NetContext.from_point(E, P), 40)]
print("F_n mod 5:", vals)

# %% points of order 2: the even terms vanish and the odd ones follow a^k b^(k(k-1)/2)
E2 = WeierstrassCurve(0, 0, 0, 1, 3)
for p in (5, 7, 11):
    roots = [x for x in range(p) if (x ** 3 + x + 3) % p == 0]
    if roots:
        Ep = E2.reduce(p)
        print(p, find_period(Ep, Ep.point(roots[0], 0), p).to_json())
