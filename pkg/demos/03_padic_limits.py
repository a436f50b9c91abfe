# %% [markdown]
# p-adic limits of F_{m q^k}(P), periodicity mod p^mu and the formal group bound.

# %%
from edslab.curve import WeierstrassCurve, reduce_point, scalar_mul
from edslab.padic import (
    kernel_valuation_check, limit_sequence, padic_limit, shipsey_consistency,
    teichmuller_point, verify_period_mod_pmu,
)
from edslab.ring import PadicResidue, teichmuller_unit

E = WeierstrassCurve(0, 0, 1, -1, 0)
P = E.point(0, 0)

# %% the Teichmuller character as the limit of a^(p^k)
print("chi(2) mod 25 =", teichmuller_unit(PadicResidue(2, 5, 2)))

E343 = E.reduce(7, 3)
T = teichmuller_point(E343, reduce_point(E, P, 7, 3), 7, 3)
print("torsion lift of P mod 343:", T, " [9]T =", scalar_mul(E343, 9, T))

# %% watch A_k = F_{m q^k}(P) mod 7^5 settle
c = padic_limit(E, P, 7, 1, 5)
print(c.to_json())
print([str(A) for A in limit_sequence(E, P, 7, 1, 5, c.q, 5)])

for m in range(1, 13):
    c = padic_limit(E, P, 7, m, 4)
    print(f"m = {m:2d}  limit = {c.value}  vanishing = {c.vanishing}")

# %% F_{kr}(P) mod p^mu has period dividing p^(mu-1)(p-1)
for p, mu in ((5, 2), (5, 3), (7, 2), (7, 3)):
    rep = verify_period_mod_pmu(E, P, p, mu, 40)
    print(p, mu, rep)

# %% alpha-free congruence and the kernel valuation bound
print("cross-ratio identity mod 5, 7:", shipsey_consistency(E, P, 5, 8), shipsey_consistency(E, P, 7, 8))
print("z([p^lambda][r]P) = 0 mod p^mu:",
      [kernel_valuation_check(E, P, p, mu) for p, mu in ((5, 2), (5, 3), (7, 2), (7, 4))])
