"""How one unique patch fades as redundant patches pile up.

Prints the attention weight left on the unique key and the distance of the
attention output from the redundant value, for a few seeded draws.
"""

import numpy as np

from vispec.analysis import DilutionParams, dilution_alpha, output_collapse_error

for seed in range(3):
    p = DilutionParams.draw(seed)
    ref = np.linalg.norm(p.W_v @ p.s)
    print(f"seed {seed}: A={p.A:+.3f} B={p.B:+.3f}")
    for R in p.R_values:
        print(f"  R={R:5d}  alpha={dilution_alpha(p.A, p.B, R):.2e}  "
              f"relative error={output_collapse_error(p, R) / ref:.2e}")
