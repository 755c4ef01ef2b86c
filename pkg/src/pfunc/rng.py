"""Pinned xorshift64* generator so simulations reproduce bit-for-bit.

Seeding: the 64-bit seed is passed through one splitmix64 step to form the
state (a zero state is replaced by a fixed odd constant).  Each draw is

    x ^= x >> 12; x ^= x << 25; x ^= x >> 27   (mod 2**64)
    return x * 0x2545F4914F6CDD1D              (mod 2**64)
"""

MASK64 = (1 << 64) - 1
_ZERO_STATE_REPLACEMENT = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        self.state = splitmix64(seed) or _ZERO_STATE_REPLACEMENT

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def bits(self, n: int) -> int:
        """The low ``n`` bits (n <= 64) of the next draw."""
        return self.next_u64() & ((1 << n) - 1)
