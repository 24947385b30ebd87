"""P-adic residue sieve over a denominator range.

For a prime p, split any candidate sum into the part over multiples of p and
the rest.  The rest is p-integral, so for the total to hit the target the
sub-sum over chosen multiples of p must match the target's p-part exactly.
Writing a = p^v * u and e = max v_p over the pool, each multiple carries the
coefficient

    c_a = p^(e-v) * u^(-1)  (mod p^e)

and a selection A of multiples works at p if and only if sum(c_a, a in A) hits
the required residue mod p^e (zero when the target is p-integral, e.g. 1).

A denominator is inadmissible at p when no subset of the pool containing it
reaches the required residue; such numbers can appear in NO exact solution,
whatever the term count.  Iterating all primes to a fixed point yields the
reduced candidate set.  Reachability is computed by a bitmask subset-sum DP
over residues mod p^e (modulus <= 97 for hi <= 99), never by 2^n enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ONE = Fraction(1)


def primes_up_to(n: int) -> list[int]:
    """Plain Eratosthenes; n is at most a few hundred here."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(2, n + 1) if flags[i]]


def padic_valuation(n: int, p: int) -> int:
    """v_p(n): largest k with p^k dividing n."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def residue_coefficient(a: int, p: int, e: int) -> int:
    """c_a = p^(e - v_p(a)) * u^(-1) mod p^e for a = p^v * u."""
    v = padic_valuation(a, p)
    if v == 0:
        raise ValueError(f"{p} does not divide {a}")
    if e < v:
        raise ValueError(f"exponent {e} below v_{p}({a}) = {v}")
    u = a // p**v
    m = p**e
    return p ** (e - v) * pow(u, -1, m) % m


def required_residue(target: Fraction, p: int, e: int) -> int | None:
    """Residue mod p^e the chosen multiples of p must sum to, or None when the
    target's denominator carries more powers of p than the pool can supply
    (no selection works at all)."""
    f = padic_valuation(target.denominator, p)
    if f > e:
        return None
    m = p**e
    q = target.denominator // p**f
    return target.numerator * pow(q, -1, m) * p ** (e - f) % m


def _rotate(x: int, s: int, m: int, mask: int) -> int:
    s %= m
    return ((x << s) | (x >> (m - s))) & mask


def _reachable_pair(pre: int, suf: int, m: int, mask: int) -> int:
    """Bitmask of residues x+y mod m with bit x set in pre, bit y in suf."""
    out = 0
    src, other = (pre, suf) if pre.bit_count() <= suf.bit_count() else (suf, pre)
    s = src
    while s:
        low = s & -s
        out |= _rotate(other, low.bit_length() - 1, m, mask)
        s ^= low
    return out


def prime_admissible_set(candidates, p: int, target: Fraction = ONE) -> set[int]:
    """Multiples of p in `candidates` that can belong to some selection whose
    sub-sum over multiples of p clears the prime (matches the target's
    residue).  Everything else provably appears in no exact solution."""
    multiples = sorted(a for a in candidates if a % p == 0)
    if not multiples:
        return set()
    e = max(padic_valuation(a, p) for a in multiples)
    m = p**e
    mask = (1 << m) - 1
    req = required_residue(target, p, e)
    if req is None:
        return set()
    coeffs = [residue_coefficient(a, p, e) for a in multiples]

    n = len(multiples)
    pre = [1] * (n + 1)  # bit 0: empty subset
    for i, c in enumerate(coeffs):
        pre[i + 1] = pre[i] | _rotate(pre[i], c, m, mask)
    suf = [1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suf[i] = suf[i + 1] | _rotate(suf[i + 1], coeffs[i], m, mask)

    admissible = set()
    for i, a in enumerate(multiples):
        need = (req - coeffs[i]) % m
        if (_reachable_pair(pre[i], suf[i + 1], m, mask) >> need) & 1:
            admissible.add(a)
    return admissible


@dataclass(frozen=True)
class ExclusionEntry:
    den: int
    prime: int
    modulus: int
    round: int


@dataclass
class ExclusionReport:
    lo: int
    hi: int
    kept: list[int]
    excluded: list[ExclusionEntry]

    def excluded_dens(self) -> list[int]:
        return sorted(e.den for e in self.excluded)

    def to_json(self) -> dict:
        return {
            "range": [self.lo, self.hi],
            "kept": list(self.kept),
            "excluded": [
                {"den": e.den, "prime": e.prime, "modulus": e.modulus, "round": e.round}
                for e in self.excluded
            ],
        }


def sieve_fixed_point(lo: int, hi: int, target: Fraction = ONE) -> ExclusionReport:
    """Iterate prime_admissible_set over all primes <= hi until nothing more
    can be removed.  Deterministic: primes ascending within a round, removals
    applied immediately, rounds numbered from 1."""
    if not (1 <= lo <= hi):
        raise ValueError(f"bad range [{lo}, {hi}]")
    kept = set(range(lo, hi + 1))
    excluded: list[ExclusionEntry] = []
    if 1 in kept and target == 1:
        # 1/1 alone exhausts the target; no multi-term solution contains it.
        kept.discard(1)
        excluded.append(ExclusionEntry(1, 1, 1, 0))

    primes = primes_up_to(hi)
    rnd = 1
    changed = True
    while changed:
        changed = False
        for p in primes:
            multiples = [a for a in kept if a % p == 0]
            if not multiples:
                continue
            e = max(padic_valuation(a, p) for a in multiples)
            admissible = prime_admissible_set(kept, p, target)
            bad = sorted(a for a in multiples if a not in admissible)
            for a in bad:
                kept.discard(a)
                excluded.append(ExclusionEntry(a, p, p**e, rnd))
            if bad:
                changed = True
        rnd += 1
    excluded.sort(key=lambda x: (x.round, x.prime, x.den))
    return ExclusionReport(lo, hi, sorted(kept), excluded)
