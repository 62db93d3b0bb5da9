"""SplitMix64: a tiny portable 64-bit generator, so seeded runs reproduce anywhere."""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed=0):
        self.state = int(seed) & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def random(self):
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo, hi, n):
        return [lo + (hi - lo) * self.random() for _ in range(n)]

    def stream(self, index):
        """Independent child generator for e.g. restart ``index``; does not advance self."""
        return SplitMix64(mix64((self.state ^ mix64(index + 1)) & MASK64))
