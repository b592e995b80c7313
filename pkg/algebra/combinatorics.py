"""
Symmetric-group, character, composition and coset machinery.

Everything here is 1-based: a Permutation stores its one-line notation
(w(1), ..., w(n)), a Character stores (a_1, ..., a_n) meaning
chi(t_j) = zeta_{a_j}. Composition is (w o v)(i) = w(v(i)).
"""
import itertools
import math
from functools import lru_cache

from sympy.utilities.iterables import multiset_permutations, partitions

from .errors import IndexOutOfRange, ParameterMismatch


class Permutation(tuple):
    """One-line notation of w in S_n."""

    def __new__(cls, images):
        return super().__new__(cls, images)

    @classmethod
    def checked(cls, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise IndexOutOfRange(f"{list(images)} is not a permutation")
        return cls(images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i):
        """The simple transposition s_i = (i, i+1)."""
        if not 1 <= i < n:
            raise IndexOutOfRange(f"s_{i} does not exist in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @property
    def n(self):
        return len(self)

    def __call__(self, i):
        return self[i - 1]

    def compose(self, other):
        """(self o other)(i) = self(other(i))."""
        if len(self) != len(other):
            raise ParameterMismatch("permutations of different degree")
        return Permutation(self[j - 1] for j in other)

    def inverse(self):
        images = [0] * len(self)
        for i, j in enumerate(self, 1):
            images[j - 1] = i
        return Permutation(images)

    def is_identity(self):
        return all(j == i for i, j in enumerate(self, 1))

    def length(self):
        """Number of inversions."""
        return sum(1 for a, b in itertools.combinations(self, 2) if a > b)

    def left_descent(self):
        """Some i with l(s_i w) < l(w), or None for the identity."""
        inv = self.inverse()
        for i in range(1, len(self)):
            if inv[i - 1] > inv[i]:
                return i
        return None

    def reduced_word(self):
        """Indices i_1..i_k with w = s_{i_1} ... s_{i_k}, k = l(w)."""
        word = []
        w = self
        while True:
            i = w.left_descent()
            if i is None:
                return word
            word.append(i)
            w = Permutation.transposition(len(w), i).compose(w)

    def permute(self, values):
        """(w . values)_i = values_{w^{-1}(i)}; used for characters and exponents."""
        out = [None] * len(self)
        for j, v in zip(self, values):
            out[j - 1] = v
        return tuple(out)


class Composition(tuple):
    """An r-composition (mu_1, ..., mu_r) of n."""

    def __new__(cls, parts):
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def block_starts(self):
        """First global strand of every nonempty block."""
        starts = []
        position = 1
        for part in self:
            if part:
                starts.append(position)
            position += part
        return tuple(starts)

    def blocks(self):
        """Global strand ranges of every block, empty blocks included."""
        ranges = []
        position = 1
        for part in self:
            ranges.append(tuple(range(position, position + part)))
            position += part
        return tuple(ranges)


class Character(tuple):
    """chi(t_j) = zeta_{values[j-1]}."""

    def __new__(cls, values):
        return super().__new__(cls, values)

    @classmethod
    def checked(cls, values, r):
        values = tuple(int(a) for a in values)
        for a in values:
            if not 1 <= a <= r:
                raise IndexOutOfRange(f"character value {a} outside 1..{r}")
        return cls(values)


def act(w, chi):
    """w(chi)(t_i) = chi(t_{w^{-1}(i)})."""
    if len(w) != len(chi):
        raise ParameterMismatch(f"S_{len(w)} cannot act on a character of length {len(chi)}")
    return Character(w.permute(chi))


def comp_of(chi, r):
    parts = [0] * r
    for a in chi:
        parts[a - 1] += 1
    return Composition(parts)


def chi0(mu):
    values = []
    for a, part in enumerate(mu, 1):
        values.extend([a] * part)
    return Character(values)


def pi_chi(chi, r):
    """
    Minimal-length w with w(chi0(Comp(chi))) = chi: the stable sort sending
    the a-block of chi0 onto the positions of chi carrying a, in order.
    """
    positions = [[] for _ in range(r)]
    for j, a in enumerate(chi, 1):
        positions[a - 1].append(j)
    return Permutation(j for block in positions for j in block)


def m_mu(mu):
    return math.factorial(sum(mu)) // math.prod(math.factorial(p) for p in mu)


@lru_cache(maxsize=None)
def young_subgroup(mu):
    """All block-preserving permutations, in lexicographic one-line order."""
    factors = [itertools.permutations(block) for block in Composition(mu).blocks()]
    group = [Permutation(itertools.chain.from_iterable(choice))
             for choice in itertools.product(*factors)]
    return tuple(sorted(group))


def in_young_subgroup(w, mu):
    for block in Composition(mu).blocks():
        if block and not (block[0] <= min(w(i) for i in block) and
                          max(w(i) for i in block) <= block[-1]):
            return False
    return True


@lru_cache(maxsize=None)
def characters_of(mu):
    """Characters with composition mu in lexicographic order (matrix index order)."""
    return tuple(Character(values) for values in multiset_permutations(list(chi0(mu))))


def cosets(mu):
    r = len(mu)
    return tuple(pi_chi(chi, r) for chi in characters_of(mu))


def all_characters(r, n):
    return tuple(Character(values)
                 for values in itertools.product(range(1, r + 1), repeat=n))


def all_permutations(n):
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def enumerate_compositions(r, n):
    """r-compositions of n, first part descending: (n,0,..), ..., (0,..,n)."""
    if r == 0:
        return [Composition(())] if n == 0 else []
    if r == 1:
        return [Composition((n,))]
    out = []
    for first in range(n, -1, -1):
        for rest in enumerate_compositions(r - 1, n - first):
            out.append(Composition((first,) + tuple(rest)))
    return out


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """Partitions of n in reverse lexicographic order: (n), ..., (1,..,1)."""
    if n == 0:
        return ((),)
    found = []
    for p in partitions(n):
        parts = []
        for k in sorted(p, reverse=True):
            parts.extend([k] * p[k])
        found.append(tuple(parts))
    return tuple(sorted(found, reverse=True))


def enumerate_multipartitions(d, n):
    """d-partitions of n: tuples of d partitions with total size n."""
    out = []
    for sizes in enumerate_compositions(d, n):
        for choice in itertools.product(*(enumerate_partitions(k) for k in sizes)):
            out.append(tuple(choice))
    return out


def enumerate_r_tuples_of_d_partitions(r, d, n):
    out = []
    for sizes in enumerate_compositions(r, n):
        for choice in itertools.product(*(enumerate_multipartitions(d, k) for k in sizes)):
            out.append(tuple(choice))
    return out


def multipartition_size(multipartition):
    return sum(sum(p) for p in multipartition)
