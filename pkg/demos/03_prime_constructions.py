"""
Prime constructions that overtake the family
============================================

Grouped automata driven by pairwise coprime counters reach thresholds the
quadratic-ish family cannot match once 41 states are available.
"""

from carefulsync import (
    best_prime_list,
    build_prime_pfa,
    martyugin_stats,
    optimal_c,
    prime_rt_formula,
    solve,
    transitive_lower_bound,
)

########################################
## small instances, formula vs search
########################################

for values in [(2, 3), (2, 3, 5), (2, 3, 5, 7)]:
    pfa = build_prime_pfa(values)
    print(f"{values}: {pfa.n} states, formula {prime_rt_formula(values)},",
          f"search {solve(pfa).threshold}")

########################################
## the 41-state flagship
########################################

flagship = build_prime_pfa((5, 7, 8, 9))
print("\n(5,7,8,9):", flagship.n, "states")
print("threshold:           ", solve(flagship).threshold)
print("family best at n=41: ", optimal_c(41)[0])
transitive = build_prime_pfa((5, 7, 8, 9), transitive=True)
print("transitive variant:  ", solve(transitive).threshold,
      ">=", transitive_lower_bound((5, 7, 8, 9)))
padded = build_prime_pfa((5, 7, 8, 9), padding=1)
print("padded to 42 states: ", solve(padded).threshold)

########################################
## flexible lists beat fixed prime runs
########################################

print("\nclassical chained stats (first 5 primes):", martyugin_stats((2, 3, 5, 7, 11)))
print("same idea, free coprime list (5,7,9,11,13,16,17,19):",
      martyugin_stats((5, 7, 9, 11, 13, 16, 17, 19)))

print("\nbest list per state budget:")
for n in (41, 43, 45, 50):
    values, padding, value = best_prime_list(n)
    print(f"  n={n}: {values} padding {padding} -> {value}")
