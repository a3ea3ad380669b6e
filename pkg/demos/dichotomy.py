"""Both directions of the dichotomy at one rank.

Special diagrams get an explicit unimodular lam.  Non-special ones have a
Gram determinant that is even for every integral lam, i.e. zero in
characteristic 2, certified over all 2^m assignments in GF(2).

    python demos/dichotomy.py C 5
"""

import sys
from collections import Counter

from wdg import Settings, verify_theorem

lie_type = sys.argv[1] if len(sys.argv) > 1 else "C"
rank = int(sys.argv[2]) if len(sys.argv) > 2 else 5

verdicts = verify_theorem(lie_type, rank, Settings(seed=0))
for v in verdicts:
    if v.special:
        what = f"unimodular lam ({v.provenance})"
    else:
        what = f"always degenerate ({v.degeneracy_method}, {v.trials} checks)"
    print(f"{'ok ' if v.passed else 'BAD'} {''.join(map(str, v.weights)):>8}  {v.id:<32} {what}")

kinds = Counter(("special" if v.special else "non-special", v.odd) for v in verdicts)
print()
for (kind, odd), n in sorted(kinds.items()):
    print(f"{n:3d} {kind} {'odd' if odd else 'non-odd'} diagrams")
print(f"{sum(v.passed for v in verdicts)}/{len(verdicts)} verdicts passed")
