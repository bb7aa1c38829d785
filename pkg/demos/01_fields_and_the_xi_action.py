# %% [markdown]
# # Fields and the action on norm labels
#
# Norm surfaces of a regular spread of PG(3, q) are labelled by F* = GF(q)*.
# Elements are stored as powers of a fixed primitive element w, so the maps
# f -> a * f**(+-t) become index arithmetic mod q - 1.

# %%
from andre import cycle_structure, generate_group, make_field, xi_generators
from andre.andre2d import orbits_2d

f9 = make_field(9)
print("GF(9) modulus (constant term first):", f9.modulus)
print("F* in position order:", [f9.render(k) for k in f9.fstar_positions()])
print("w^2 encoded:", f9.value(2), "= w + 1")

# %% [markdown]
# The generators are multiplication by w, inversion, and Frobenius when q is
# not prime.  Closing them under composition gives the acting group.

# %%
for q in (5, 7, 8, 9, 27):
    group = generate_group(xi_generators(make_field(q)))
    shapes = sorted({tuple(sorted(cycle_structure(g).items())) for g in group})
    print(f"q={q:2d}  |group|={group.order:3d}  distinct cycle types={len(shapes)}")

# %% [markdown]
# ## q = 5 by hand
#
# The six 2-subsets of GF(5)* split into an orbit of four sets containing
# {1, 2} and an orbit of two containing {1, 4}.

# %%
f5 = make_field(5)
for orb in orbits_2d(f5, 2):
    print(sorted(sorted(f5.value(k) for k in s) for s in orb))
