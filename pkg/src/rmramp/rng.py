"""Deterministic pseudo-randomness for encoding and simulation.

The generator is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter
advanced by the golden-ratio constant and passed through a two-round
xor-multiply finalizer.  It is fixed here so that every seeded run of the
package reproduces bit-identically on any platform.  Trial i of a
simulation uses an independent stream seeded with derive_seed(seed, i),
which makes results independent of how trials are split across workers.
"""

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z):
    """SplitMix64 finalizer: a 64-bit bijective hash."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed, index):
    """Sub-stream seed for the index-th independent trial of a run."""
    return mix64((seed & _MASK) ^ mix64(index + 1))


class SplitMix64:
    """The named fixed PRNG used throughout the package.

    Swap point: anything with the same method surface (next_u64 / below /
    nonzero_below / sample) can replace it where a generator is accepted.
    """

    __slots__ = ("_state",)

    def __init__(self, seed):
        self._state = seed & _MASK

    def next_u64(self):
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def below(self, n):
        """Uniform integer in [0, n), by rejection (exactly uniform)."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = _MASK + 1 - (_MASK + 1) % n
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def nonzero_below(self, n):
        """Uniform integer in [1, n)."""
        return 1 + self.below(n - 1)

    def sample(self, n, k):
        """k distinct integers from [0, n), in draw order (Floyd's method)."""
        if not 0 <= k <= n:
            raise ValueError("sample() needs 0 <= k <= n")
        chosen = []
        seen = set()
        for j in range(n - k, n):
            t = self.below(j + 1)
            if t in seen:
                t = j
            seen.add(t)
            chosen.append(t)
        return chosen
