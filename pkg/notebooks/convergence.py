#%% [markdown]
# How fast do the truncated sums converge?
#
# Lattice products first, then the harmonic series.  Needs matplotlib, which the
# package itself does not depend on.

#%%
import math

import matplotlib.pyplot as plt
import numpy as np

from vpvcheck.eulersums import double_zeta, euler_sum
from vpvcheck.lattice import LatticeRegion, log_product_sum
from vpvcheck.polylog import li, zeta

HQ2 = LatticeRegion.hyperquadrant(2)

#%% [markdown]
# Weight b/a^2 with both bases inside the unit disc: the error drops geometrically.
# With base -1 on the first axis it only falls like depth^-2.

#%%
depths = np.arange(10, 401, 10)
z = 0.2
smooth_want = 0.3 * li(2, 0.2) / 0.49
a1_want = 3 * z * (1 + z) * zeta(3) / (4 * (1 - z) ** 3)

smooth = [abs(log_product_sum(HQ2, (2, -1), (0.2, 0.3), int(d)).value - smooth_want)
          for d in depths]
slow = [abs(-log_product_sum(HQ2, (3, -2), (-1.0, z), int(d)).value - a1_want) / a1_want
        for d in depths]

fig, ax = plt.subplots()
ax.semilogy(depths, np.maximum(smooth, 1e-17), label="x = (0.2, 0.3), abs")
ax.semilogy(depths, slow, label="x = (-1, 0.2), rel")
ax.semilogy(depths, 0.1 * depths ** -2.0, "k:", label="depth^-2")
ax.set_xlabel("depth")
ax.legend()
plt.show()

#%% [markdown]
# Series: the bare partial sum misses roughly (log N + 1)/N for zeta(2,1).
# The tail estimate closes nearly all of that.

#%%
ns = [10 ** k for k in range(2, 7)]
bare, fixed = [], []
for n in ns:
    r = double_zeta(2, 1, n, full_output=True)
    bare.append(abs(r.value - zeta(3)))
    fixed.append(abs(r.corrected - zeta(3)))

plt.loglog(ns, bare, "o-", label="partial sum")
plt.loglog(ns, np.maximum(fixed, 1e-17), "s-", label="partial sum + tail")
plt.loglog(ns, [(math.log(n) + 1) / n for n in ns], "k:", label="(log N + 1)/N")
plt.legend()
plt.show()

#%%
r = euler_sum("s_h", 3, 2, 10 ** 6, full_output=True)
want = 7.5 * zeta(5) + zeta(2) * zeta(3)
print(f"s_h(3,2): bare {r.value - want:+.3e}  tail {r.tail:.3e}  corrected {r.corrected - want:+.3e}")
