# %% [markdown]
# # Higher-dimensional André planes
#
# For PG(2n+1, q) each norm surface has n + 1 choices, recorded as an
# exponent r in {0..n} standing for x -> x**(q**r).  An indicator function is
# a tuple of q - 1 such exponents; there are (n+1)**(q-1) of them.

# %%
from andre import UpsilonElement, apply_upsilon, count_hd, enumerate_hd, make_field

f3 = make_field(3)
start = (0, 1)  # {(1, 1), (2, 3)}
swap = UpsilonElement(alpha=f3.log(2), tau=0, sigma=0, sign=1)
shift = UpsilonElement(alpha=0, tau=0, sigma=1, sign=1)
print("multiply by 2:", apply_upsilon(swap, start, 2, f3))
print("shift sigma once:", apply_upsilon(shift, start, 2, f3))

e = enumerate_hd(2, f3)
print("orbit sizes:", [e.regular_orbit_size] + e.orbit_sizes)

# %% [markdown]
# Orbit enumeration acts on integer codes of the indicators, so memory grows
# with (n+1)**(q-1) and not with any symmetric group.

# %%
for n, q in [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 7)]:
    e = enumerate_hd(n, make_field(q))
    print(f"n={n} q={q}  indicators={(n + 1) ** (q - 1):6d}  orbits={e.total_orbits:4d}  "
          f"non-Desarguesian={e.count}")

# %% [markdown]
# Counting with Burnside's lemma runs over the parameters (alpha, tau, sign,
# sigma) and groups sigma by its order.

# %%
for q in (3, 4, 5, 7, 8):
    print(f"q={q}", [count_hd(n, make_field(q)) for n in range(2, 11)])
