# %% [markdown]
# Division values and elliptic divisibility sequences on y^2 + y = x^3 - x, P = (0, 0).

# %%
from edslab.curve import WeierstrassCurve, scalar_mul
from edslab.divpoly import NetContext, division_values, eval_division_value
from edslab.eds import check_recursion, discriminant, divisibility_check, from_curve_point, generate

E = WeierstrassCurve(0, 0, 1, -1, 0)
P = E.point(0, 0)
print("discriminant", E.discriminant)

# %%
W = from_curve_point(E, P)
print("W_0..W_20:", generate(W, 20))
print("Disc(W) from W_2, W_3, W_4:", discriminant(W.w2, W.w3, W.w4))
print("recursion up to m + n = 60:", check_recursion(W, 60))
print("W_m | W_n for m | n <= 40:", divisibility_check(W, 40))

# %% the ladder reaches huge indices without the intermediate terms
ctx = NetContext.from_point(E, P)
big = eval_division_value(ctx, 1000)
print("F_1000(P) has about", round(abs(big.numerator).bit_length() * 0.30103), "digits")

# same thing, reduced mod 7^3
ctx343 = NetContext.from_point(E.reduce(7, 3), E.reduce(7, 3).point(0, 0))
print("F_(10^30)(P) mod 343 =", eval_division_value(ctx343, 10 ** 30))

# %% denominators of [n]P are the squares of F_n(P)
F = division_values(ctx, 12)
for n in range(2, 8):
    x, y = scalar_mul(E, n, P).xy()
    print(n, x, "  F_n^2 =", F[n] ** 2)
