# %% [markdown]
# Which primes admit a p-adic limit of an EDS, and when that limit is zero.

# %%
from sympy import primerange

from edslab.curve import WeierstrassCurve
from edslab.eds import Eds, classify_prime, eds_padic_limit, from_curve_point, vanishing_predict
from edslab.errors import GateRefused
from edslab.padic import padic_limit

E = WeierstrassCurve(0, 0, 1, -1, 0)
P = E.point(0, 0)
W = from_curve_point(E, P)

for p in primerange(2, 60):
    c = classify_prime(W, p)
    print(p, "admissible" if c.admissible else c.reasons)

# %% limits at admissible primes, with the prediction from the order of P mod p
for p in (5, 7, 37):
    row = []
    for m in range(1, 13):
        cert = eds_padic_limit(W, p, m, 3)
        row.append("0" if cert.vanishing else ".")
        assert cert.vanishing == vanishing_predict(W, p, m)
    print(p, "r =", cert.r, "".join(row))

# %% a scaled sequence W_n = 2^(n^2-1) F_n(P)
W2 = Eds.with_scale(E, P, 2)
print(W2.w2, W2.w3, W2.w4)
for m in range(1, 5):
    print(m, eds_padic_limit(W2, 7, m, 4).value)

# %% when p divides r but r is not a power of p, the limit still lives
E5 = WeierstrassCurve(0, 0, 0, -2, -5)
P5 = E5.point(3, 4)
print([str(padic_limit(E5, P5, 5, m, 3).value) for m in range(1, 7)])

try:
    eds_padic_limit(W, 3, 1, 3)
except GateRefused as exc:
    print("refused:", exc)
