"""A tour of the search operators with hand-picked inputs.

Shows the two movement rules (inside/outside the safe zone), the battle
rules against stronger and weaker enemies, and the merged variant's
differential mutation and heavy-tailed exploration step.
"""

import numpy as np

import battleopt as bo
from battleopt.core import make_rng

rng = make_rng(0)

# --- the safe zone -----------------------------------------------------------
best = bo.Individual(np.array([2.0, -1.0]), fitness=1.0)
worst = bo.Individual(np.array([5.0, 3.0]), fitness=9.0)
zone = bo.safe_zone_radius(best, worst, rng)
print(f"safe zone: center {zone.center}, radius {zone.radius:.3f} "
      f"(||best-worst|| = 5, amplified by delta ~ U(0.8, 1.2))")

member = bo.Individual(np.array([1.0, 1.0]), fitness=4.0)
print(f"member at {member.position} inside? {bo.in_safe_zone(member, zone)}\n")

# --- movement rules -----------------------------------------------------------
print("in-zone move, x + x_best*sin(2 pi r), five draws:")
for _ in range(5):
    print("  ->", bo.move_inside(member, best, rng))

print("out-of-zone move (per-dimension jitter or pull toward best):")
far = bo.Individual(np.array([60.0, -70.0]), fitness=50.0)
for _ in range(3):
    print("  ->", bo.move_outside(far, best, rng))

# --- battle rules ---------------------------------------------------------------
enemy = bo.Individual(np.array([2.5, -1.5]), fitness=2.0)
direction = bo.battle_dir(member, enemy)
print(f"\nbattle direction (enemy fitter): {direction}")
print("vs stronger:", bo.battle_vs_stronger(member, enemy, direction, rng))
weaker = bo.Individual(np.array([5.0, 5.0]), fitness=8.0)
direction = bo.battle_dir(member, weaker)
print("vs weaker:  ", bo.battle_vs_weaker(member, direction, rng))

# --- the merged variant's movement operators -------------------------------------
centroid = np.array([1.5, 1.0])
print("\ndifferential mutation toward best and centroid:")
for _ in range(3):
    print("  ->", bo.diff_mutation(member, best, centroid, rng))

print("levy exploration step (occasionally jumps far):")
steps = [bo.levy_move(member, 1.5, rng) for _ in range(2000)]
largest = max(float(np.max(np.abs(s - member.position))) for s in steps)
print(f"  2000 steps from {member.position}: largest single-coordinate jump {largest:.1f}")
