"""Independent reimplementation of the random polynomial generator.

Regenerates tests/golden/random_upoly_seed0_deg3_coeff9.txt from a pure
Python mt19937_64 and the documented draw order (degree, leading, ascending).
"""

MASK = 2**64 - 1


class MT19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK
        self.index = 312

    def __call__(self):
        if self.index >= 312:
            for k in range(312):
                y = (self.mt[k] & 0xFFFFFFFF80000000) | (self.mt[(k + 1) % 312] & 0x7FFFFFFF)
                v = self.mt[(k + 156) % 312] ^ (y >> 1)
                if y & 1:
                    v ^= 0xB5026F5AA96619E9
                self.mt[k] = v
            self.index = 0
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


def uniform(rng, lo, hi):
    n = hi - lo + 1
    limit = MASK - MASK % n
    while True:
        x = rng()
        if x < limit:
            return lo + x % n


def random_upoly(rng, max_deg, bound):
    d = uniform(rng, 0, max_deg)
    lead = uniform(rng, -bound, bound - 1)
    if lead >= 0:
        lead += 1
    return [uniform(rng, -bound, bound) for _ in range(d)] + [lead]


def fmt(coeffs):
    out = ""
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        out += ("-" if c < 0 else "") if not out else f" {sign} "
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        a = abs(c)
        out += str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
    return out or "0"


if __name__ == "__main__":
    print(fmt(random_upoly(MT19937_64(0), 3, 9)))
