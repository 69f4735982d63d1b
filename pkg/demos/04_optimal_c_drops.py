"""
Where the optimal cost parameter jumps down
===========================================

Scanning the family over n, the best c mostly creeps upward, but near
powers of two it collapses.  Watch the first drops and check the growth
estimates that explain the drift.
"""

from carefulsync import f_bounds, f_closed, local_optima, phi, scan_drops

########################################
## drops of the optimal c up to n=500
########################################

print("n_before -> n_after   c: before -> after   thresholds")
for event in scan_drops(500):
    print(f"{event.n_before:>6} -> {event.n_after:<8}"
          f"{event.c_before:>5} -> {event.c_after:<7}"
          f"{event.r_before} -> {event.r_after}")

########################################
## the double optimum at n=99
########################################

print("\nlocal optima at n=99:", local_optima(99))
print("(two maximizers more than one apart; unique below n=10000)")

########################################
## growth roots and cost brackets
########################################

print("\nc    phi_c        residual")
for c in (1, 2, 3, 5, 10):
    root = phi(c)
    print(f"{c:>2}   {root.value:.9f}  {root.residual:.1e}")

print("\nbrackets around f(1000, c):")
for c in (1, 2, 5):
    lo, hi, slo, shi = f_bounds(1000, c)
    f = f_closed(1000, c)
    print(f"  c={c}: f = {f};  tight ({lo:.0f}, {hi:.0f})  simple [{slo:.0f}, {shi:.0f}]")
