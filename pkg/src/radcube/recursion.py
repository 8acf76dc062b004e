"""Positive integer sequences satisfying a_i = e*a_{i+1} - r*a_{i+2}.

For integers e > 0 and r > 1, an infinite sequence of positive integers
obeying the recursion forces the consecutive ratios q_i = a_i/a_{i+1} to be
constant (a telescoping divisibility argument: a_0 a_2 - a_1^2 is divisible
by every power of r), so q_0 satisfies q^2 - e*q + r = 0.  By the rational
root test q_0 is an integer dividing r; a root q_0 > 1 would force an
infinite strictly decreasing chain of positive integers, so q_0 = 1, the
sequence is constant, and 1 - e + r = 0, i.e. e = r + 1.

`classify` decides ConstantOnly (e = r+1) versus NoSequence with an
explicit certificate; `search_sequences` is the independent brute-force
oracle over bounded prefixes, solving the recursion forward for a_{i+2}
and keeping only integral positive continuations.  Ratios are kept as
exact fractions; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

__all__ = [
    "RecursionInstance",
    "PrefixReport",
    "ClassifyVerdict",
    "verify_prefix",
    "classify",
    "search_sequences",
]


@dataclass(frozen=True)
class RecursionInstance:
    e: int
    r: int
    prefix: tuple[int, ...]

    @property
    def ratios(self) -> tuple[Fraction, ...]:
        return tuple(
            Fraction(self.prefix[i], self.prefix[i + 1])
            for i in range(len(self.prefix) - 1)
        )

    @property
    def residuals(self) -> tuple[int, ...]:
        e, r, a = self.e, self.r, self.prefix
        return tuple(
            a[i] - e * a[i + 1] + r * a[i + 2] for i in range(len(a) - 2)
        )


@dataclass(frozen=True)
class PrefixReport:
    instance: RecursionInstance
    residuals: tuple[int, ...]
    valid: bool


def verify_prefix(e: int, r: int, prefix) -> PrefixReport:
    """Per-index residuals a_i - e*a_{i+1} + r*a_{i+2}; valid iff all zero."""
    prefix = tuple(int(a) for a in prefix)
    if len(prefix) < 3:
        raise InputError(f"prefix needs length >= 3, got {len(prefix)}")
    if any(a < 1 for a in prefix):
        raise InputError("prefix entries must be positive integers")
    inst = RecursionInstance(e, r, prefix)
    res = inst.residuals
    return PrefixReport(instance=inst, residuals=res, valid=not any(res))


@dataclass(frozen=True)
class ClassifyVerdict:
    verdict: str  # "ConstantOnly" | "NoSequence"
    e: int
    r: int
    divisor_values: tuple[tuple[int, int], ...]  # (q, q^2 - e*q + r)
    certificate: str

    @property
    def constant_only(self) -> bool:
        return self.verdict == "ConstantOnly"


def classify(e: int, r: int) -> ClassifyVerdict:
    """Decide whether any admissible infinite sequence exists.

    A valid sequence forces a constant rational ratio q with
    q^2 - e*q + r = 0; q must then be a positive integer divisor of r, and
    any root q > 1 is excluded because it would make the sequence strictly
    decrease through positive integers forever.  So sequences exist iff
    q = 1 is a root, i.e. e = r + 1, and then all of them are constant.
    """
    if e < 1:
        raise InputError(f"need e >= 1, got {e}")
    if r <= 1:
        raise InputError(f"need r > 1, got {r}")
    divisors = [q for q in range(1, r + 1) if r % q == 0]
    values = tuple((q, q * q - e * q + r) for q in divisors)
    if 1 - e + r == 0:
        cert = (
            "q = 1 solves q^2 - eq + r = 0 (e = r+1); any admissible sequence "
            "has constant ratio 1, hence is constant"
        )
        if any(q > 1 and v == 0 for q, v in values):
            bigger = [q for q, v in values if v == 0 and q > 1]
            cert += (
                f"; roots {bigger} > 1 are excluded (they would force an "
                "infinite strictly decreasing chain of positive integers)"
            )
        return ClassifyVerdict("ConstantOnly", e, r, values, cert)
    roots_gt1 = [q for q, v in values if v == 0]
    if roots_gt1:
        cert = (
            f"integer roots {roots_gt1} of q^2 - eq + r are all > 1 and are "
            "excluded by infinite descent through positive integers"
        )
    else:
        cert = (
            "no positive divisor of r is a root of q^2 - eq + r: "
            + ", ".join(f"q={q}: {v}" for q, v in values)
        )
    return ClassifyVerdict("NoSequence", e, r, values, cert)


def search_sequences(e: int, r: int, length: int, bound: int) -> list[tuple[int, ...]]:
    """All recursion prefixes of the given length with entries in [1, bound].

    Enumerates seed pairs (a_0, a_1) and extends forward by
    a_{i+2} = (e*a_{i+1} - a_i)/r, keeping continuations that stay
    integral, positive and within the bound; lexicographic in (a_0, a_1).

    The bound caps every entry, not just the seeds.  Without the cap,
    bounded seeds can fake long prefixes of nonexistent sequences by
    front-loading powers of r (for e=4, r=2 the seed (32, 32) rides
    a_0 a_2 - a_1^2 = 2^9 through twelve terms before dying); with it, a
    prefix of length L survives only if both characteristic components
    stay small, which is exactly the constant-sequence regime.
    """
    if length < 3:
        raise InputError(f"need length >= 3, got {length}")
    if bound < 1:
        raise InputError(f"need bound >= 1, got {bound}")
    if e < 1 or r <= 1:
        raise InputError("need e >= 1 and r > 1")
    found = []
    for a0 in range(1, bound + 1):
        for a1 in range(1, bound + 1):
            seq = [a0, a1]
            while len(seq) < length:
                nxt, rem = divmod(e * seq[-1] - seq[-2], r)
                if rem != 0 or not (1 <= nxt <= bound):
                    break
                seq.append(nxt)
            if len(seq) == length:
                found.append(tuple(seq))
    return found
