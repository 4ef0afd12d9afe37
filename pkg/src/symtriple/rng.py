"""Deterministic 64-bit linear congruential generator (MMIX constants).

Used instead of ``random`` so that sampled checks are reproducible across
Python versions and other implementations from the seed alone.
"""

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int):
        self.seed = seed
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state * _MULT + _INC) & _MASK
        return self.state >> 33

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("empty range")
        return self.next() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.randrange(hi - lo + 1)
