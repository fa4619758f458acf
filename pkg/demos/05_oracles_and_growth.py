"""Brute-force oracles and the free-group growth formula.

Everything the fast code computes is cross-checked, at desk scale, by
slower but obviously-correct machinery: simple-cycle enumeration for the
systole, covering-space search for rank-under-budget, and reduced-word
counting for ball growth in free groups.
"""
from fractions import Fraction

from sgt import gen_random, gen_bouquet, systole, free_ball_size
from sgt.oracle import brute_systole, max_rank_under_budget

# The fast systole (per-edge delete-and-reconnect scan) against exhaustive
# backtracking over simple cycles.  Exact rational equality, every time.
print("systole vs brute force on random graphs:")
for seed in range(5):
    g = gen_random(v=5, b=4, seed=seed, length_law=("uniform", 0.1, 2.0))
    fast = systole(g).length
    brute = brute_systole(g)
    print(f"  seed {seed}: fast = {fast} == brute = {brute}: {fast == brute}")

# Rank under a length budget: how many independent homology classes can
# loops through one point reach without exceeding a given length?  The
# oracle answers exactly, with witness loops.
g = gen_bouquet(3, ["1", "1", "5"])
for budget in (Fraction(1, 2), Fraction(1), Fraction(5)):
    r, witnesses = max_rank_under_budget(g, base=0, budget=budget)
    lengths = [str(w.length) for w in witnesses]
    print(f"\nbouquet(1, 1, 5), budget {budget}: rank {r}, "
          f"witness lengths {lengths}")

# Ball growth in a free group of rank k: the number of reduced words of
# length <= r has the closed form 1 + 2k((2k-1)^r - 1)/(2k - 2) for k >= 2.
# This is the counting fact behind the clustering stage: short independent
# loops through one point generate a free subgroup, and a ball of bounded
# radius can only hold so many elements.
print("\nfree-group ball sizes |B(r)|:")
header = "  r:    " + "".join(f"{r:>8}" for r in range(6))
print(header)
for k in (1, 2, 3):
    row = "".join(f"{free_ball_size(k, r):>8}" for r in range(6))
    print(f"  k = {k}:{row}")
