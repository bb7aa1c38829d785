# %% [markdown]
# # Two-dimensional André planes: enumerate, then count
#
# Enumeration builds every subset of a given size and computes orbits.
# Counting only needs the cycle type of each group element: a subset is
# fixed by g exactly when it is a union of cycles of g.

# %%
import time

from andre import count_2d, enumerate_2d, make_field
from andre.andre2d import burnside_sum_2d, max_index

for q in (5, 7, 8, 9, 11, 13):
    f = make_field(q)
    enum = [len(enumerate_2d(f, i)) for i in range(2, max_index(q) + 1)]
    count = [count_2d(f, i) for i in range(2, max_index(q) + 1)]
    print(f"q={q:2d}  enumerated={enum}  counted={count}")

# %% [markdown]
# At index (q-1)/2 a set and its complement give isomorphic planes, so the
# group is doubled by complementation.  Composed with complementation, an
# element fixes 2**(number of cycles) sets if every cycle has even length,
# and none otherwise.

# %%
f = make_field(11)
total, order = burnside_sum_2d(f, 5)
print(f"q=11 index 5: {total} / {order} = {total // order}")

# %% [markdown]
# Counting scales to orders where enumeration would not.

# %%
t0 = time.perf_counter()
row = [count_2d(make_field(27), i) for i in range(2, 14)]
print("q=27:", row, f"({time.perf_counter() - t0:.3f}s)")
