"""Derivations on associative matrix rings: the inner action x -> [a, x],
Leibniz verification, entrywise lifts of base-ring derivations, the 2x2
extension block and its doubling tower up to M_n(R), and the
two-generator propagation check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .checks import CheckReport, Violation
from .errors import DomainError
from .matrices import Matrix, commutator
from .rings import BaseDerivation

__all__ = [
    "InnerDerivation",
    "ExtensionResult",
    "inner_apply",
    "leibniz_check",
    "entrywise",
    "extend_m2",
    "extend_tower",
    "two_generator_check",
]


@dataclass(frozen=True)
class InnerDerivation:
    """x -> a x - x a for a fixed generator a."""

    generator: Matrix

    def __call__(self, x):
        return inner_apply(self.generator, x)


def inner_apply(a, x):
    """The inner derivation action [a, x] = ax - xa."""
    return a * x - x * a


def leibniz_check(deriv, samples):
    """Check additivity and the Leibniz identity of `deriv` on a list of
    (x, y) pairs; stops at the first violated pair."""
    checked = 0
    for x, y in samples:
        dx = deriv(x)
        dy = deriv(y)
        lhs = deriv(x + y)
        rhs = dx + dy
        if lhs != rhs:
            return CheckReport(
                checked, (Violation("additivity", f"pair {checked}", lhs, rhs),)
            )
        lhs = deriv(x * y)
        rhs = dx * y + x * dy
        if lhs != rhs:
            return CheckReport(
                checked, (Violation("leibniz", f"pair {checked}", lhs, rhs),)
            )
        checked += 1
    return CheckReport(checked)


def entrywise(delta, n):
    """Lift a base derivation to M_n(R) by applying it to every entry.
    Over a commutative base this is itself a derivation."""

    def apply(mat):
        if mat.n != n:
            raise DomainError(f"expected a {n}x{n} matrix, got {mat.n}x{mat.n}")
        return Matrix(mat.ring, n, tuple(delta(a) for a in mat.entries))

    return apply


def extend_m2(delta):
    """The 2x2 extension of a base derivation:

        [[l, m], [v, e]] -> [[dl, dm + m], [dv - v, de]]

    i.e. the entrywise lift plus the inner derivation of diag(1/2, -1/2).
    """

    def apply(mat):
        if mat.n != 2:
            raise DomainError(f"extend_m2 acts on 2x2 matrices, got n={mat.n}")
        lam, mu, nu, eta = mat.entries
        return Matrix(
            mat.ring,
            2,
            (delta(lam), delta(mu) + mu, delta(nu) - nu, delta(eta)),
        )

    return apply


@dataclass(frozen=True)
class ExtensionResult:
    """A base derivation lifted to M_n(R) by repeated 2x2 doubling up to
    M_{2^depth}(R) and compression with e = e_{1,1} + ... + e_{n,n}."""

    delta: BaseDerivation
    n: int
    depth: int

    def __call__(self, mat):
        if mat.n != self.n:
            raise DomainError(f"expected a {self.n}x{self.n} matrix, got n={mat.n}")
        n = self.n
        ring = mat.ring
        size = 1 << self.depth
        padded = [ring.zero] * (size * size)
        for i in range(n):
            for j in range(n):
                padded[i * size + j] = mat.entries[i * n + j]
        out = [ring.zero] * (size * size)
        _apply_block(self.delta, padded, out, size, 0, 0, size)
        # compressing with e and restricting to M_n keeps the top-left block
        return Matrix(
            ring, n, tuple(out[i * size + j] for i in range(n) for j in range(n))
        )


def _apply_block(delta, src, out, width, r0, c0, size):
    # One doubling level: [[A, B], [C, E]] -> [[D(A), D(B)+B], [D(C)-C, D(E)]]
    # with D the derivation of the half-sized blocks; size 1 bottoms out at delta.
    if size == 1:
        out[r0 * width + c0] = delta(src[r0 * width + c0])
        return
    h = size // 2
    _apply_block(delta, src, out, width, r0, c0, h)
    _apply_block(delta, src, out, width, r0, c0 + h, h)
    _apply_block(delta, src, out, width, r0 + h, c0, h)
    _apply_block(delta, src, out, width, r0 + h, c0 + h, h)
    for i in range(r0, r0 + h):
        for j in range(c0 + h, c0 + size):
            k = i * width + j
            out[k] = out[k] + src[k]
    for i in range(r0 + h, r0 + size):
        for j in range(c0, c0 + h):
            k = i * width + j
            out[k] = out[k] - src[k]


def extend_tower(delta, n):
    """Lift `delta` to M_n(R), n >= 2, through the smallest power-of-two
    tower that covers n."""
    if n < 2:
        raise DomainError("the tower extension needs n >= 2")
    return ExtensionResult(delta, n, (n - 1).bit_length())


def two_generator_check(x, y, d, max_len):
    """Propagate Delta from Delta(x) = [d, x], Delta(y) = [d, y] to every
    word in x, y of length <= max_len via the Leibniz rule, computing
    every split of every word; checks that all splits of a word agree
    and that each propagated value equals [d, word]."""
    if max_len < 1:
        raise DomainError("max_len must be >= 1")
    x._require_compatible(y)
    x._require_compatible(d)
    words = {"x": x, "y": y}
    delta = {"x": commutator(d, x), "y": commutator(d, y)}
    checked = 2  # the generators hold by definition
    violations = []
    for length in range(2, max_len + 1):
        for letters in product("xy", repeat=length):
            w = "".join(letters)
            words[w] = words[w[:-1]] * words[w[-1]]
            first = None
            for cut in range(1, length):
                u, v = w[:cut], w[cut:]
                cand = delta[u] * words[v] + words[u] * delta[v]
                if first is None:
                    first = cand
                elif cand != first:
                    violations.append(
                        Violation("split-disagreement", f"{u}|{v}", cand, first)
                    )
            delta[w] = first
            target = commutator(d, words[w])
            if first != target:
                violations.append(Violation("inner-mismatch", w, first, target))
            checked += 1
    return CheckReport(checked, tuple(violations))
