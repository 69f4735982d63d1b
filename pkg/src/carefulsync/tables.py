"""Published reference values the toolkit must reproduce, frozen verbatim."""

from dataclasses import dataclass

# Maximal reset threshold over all binary PFAs with n states, 2 <= n <= 10.
P_N_2 = {2: 1, 3: 4, 4: 9, 5: 16, 6: 26, 7: 39, 8: 55, 9: 73, 10: 94}

# Family thresholds for 2 <= n <= 15 and c = 0..min(4, n-2).
GRID = {
    2: (1,),
    3: (4, 2),
    4: (9, 7, 3),
    5: (16, 15, 10, 4),
    6: (25, 26, 21, 13, 5),
    7: (36, 39, 35, 27, 16),
    8: (49, 55, 52, 44, 33),
    9: (64, 73, 72, 65, 53),
    10: (81, 93, 94, 89, 78),
    11: (100, 116, 119, 115, 106),
    12: (121, 141, 146, 144, 136),
    13: (144, 168, 176, 176, 169),
    14: (169, 197, 208, 211, 206),
    15: (196, 228, 242, 248, 246),
}

# Best family threshold for 11 <= n <= 40.
CONCLUSION = {
    11: 119, 12: 146, 13: 176, 14: 211, 15: 248, 16: 288, 17: 332, 18: 379,
    19: 429, 20: 483, 21: 539, 22: 599, 23: 663, 24: 732, 25: 804, 26: 881,
    27: 961, 28: 1044, 29: 1132, 30: 1222, 31: 1317, 32: 1416, 33: 1517,
    34: 1624, 35: 1733, 36: 1846, 37: 1963, 38: 2082, 39: 2207, 40: 2334,
}


@dataclass(frozen=True)
class DefeatRow:
    """Where the prime constructions overtake the family, 41 <= n <= 46."""

    n: int
    best_c: int
    cerny_rt: int
    q: int
    rt: int
    rt_transitive: int
    primes: tuple[int, ...]

    @property
    def padding(self) -> int:
        return self.n - (3 * len(self.primes) + sum(self.primes))


DEFEAT = (
    DefeatRow(41, 13, 2465, 2520, 3114, 3056, (5, 7, 8, 9)),
    DefeatRow(42, 13, 2601, 2520, 3117, 3062, (5, 7, 8, 9)),
    DefeatRow(43, 13, 2739, 3080, 3802, 3726, (5, 7, 8, 11)),
    DefeatRow(44, 14, 2882, 3465, 4275, 4177, (5, 7, 9, 11)),
    DefeatRow(45, 14, 3028, 3960, 4869, 4683, (5, 8, 9, 11)),
    DefeatRow(46, 15, 3177, 3960, 4872, 4689, (5, 8, 9, 11)),
)


@dataclass(frozen=True)
class DropRow:
    """A drop of the optimal c, with the local-optimum track endpoints.

    The old track is optimal for the last time at (n_left, c_left) and lives
    on as a local optimum until track_end; the new track is optimal from
    (n_right, c_right) on and first appears at track_start.
    """

    n_left: int
    track_end: int
    c_left: int
    r_left: int
    n_right: int
    track_start: int
    c_right: int
    r_right: int
    drop: int


DROPS = (
    DropRow(47, 47, 15, 3331, 48, 48, 14, 3490, 1),
    DropRow(99, 100, 35, 17323, 99, 98, 33, 17323, 2),
    DropRow(204, 207, 78, 84024, 205, 202, 73, 84936, 5),
    DropRow(418, 426, 166, 396403, 419, 412, 157, 398437, 9),
    DropRow(854, 869, 350, 1836388, 855, 840, 333, 1841006, 17),
    DropRow(1737, 1768, 730, 8347386, 1738, 1709, 696, 8357520, 34),
    DropRow(3524, 3583, 1508, 37445730, 3525, 3468, 1444, 37468248, 64),
    DropRow(7132, 7246, 3097, 166023725, 7133, 7024, 2977, 166072093, 120),
)
