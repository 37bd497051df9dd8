"""Symmetric powers S^n A, the diagonal map, and the ring homomorphism
``Phi_n(f)/n!`` through which every Frobenius n-homomorphism factors."""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, factorial, prod

from .algebra import CommutativeAlgebra, LinearMap
from .errors import CapExceeded
from .frobenius import PhiTable
from .report import all_of, failed, passed

DEFAULT_MAX_DIM = 120


def distinct_permutations(seq):
    """Distinct orderings of ``seq`` (a multiset), in lexicographic order."""
    items = sorted(seq)
    n = len(items)
    out = []

    def walk(prefix, counts):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for x in sorted(counts):
            if counts[x]:
                counts[x] -= 1
                prefix.append(x)
                walk(prefix, counts)
                prefix.pop()
                counts[x] += 1

    walk([], Counter(items))
    return out


def orbit_size(lam):
    """Number of distinct orderings of the multiset ``lam``."""
    return factorial(len(lam)) // prod(factorial(m) for m in Counter(lam).values())


class SymmetricPowerAlgebra(CommutativeAlgebra):
    """S^n A in the basis of orbit sums ``m_lambda`` of basis tensors."""

    def __init__(self, base, n, verify=True, max_dim=DEFAULT_MAX_DIM):
        if n < 1:
            raise ValueError("symmetric power needs n >= 1")
        d = base.dim
        size = comb(d + n - 1, n)
        if size > max_dim:
            raise CapExceeded(f"S^{n} of a {d}-dimensional algebra has dimension {size}", count=size)
        self.base = base
        self.power = n
        self.multisets = list(combinations_with_replacement(range(d), n))
        self.index = {lam: i for i, lam in enumerate(self.multisets)}
        perms = [distinct_permutations(lam) for lam in self.multisets]
        table = base._table
        D = len(self.multisets)
        zero = base.field.coerce(0)
        c = [[None] * D for _ in range(D)]
        for p in range(D):
            for q in range(p, D):
                acc = defaultdict(lambda: zero)
                for sigma in perms[p]:
                    for tau in perms[q]:
                        factors = [table[s][t] for s, t in zip(sigma, tau)]
                        if any(not fac for fac in factors):
                            continue
                        for combo in product(*factors):
                            key = tuple(k for k, _ in combo)
                            if all(key[i] <= key[i + 1] for i in range(n - 1)):
                                coeff = 1
                                for _, v in combo:
                                    coeff = coeff * v
                                acc[key] += coeff
                row = [zero] * D
                for key, v in acc.items():
                    row[self.index[key]] = v
                c[p][q] = c[q][p] = row
        u = base.unit_coords
        unit = [prod((u[i] for i in lam), start=base.field.coerce(1)) for lam in self.multisets]
        labels = ["m(" + ",".join(base.labels[i] for i in lam) + ")" for lam in self.multisets]
        super().__init__(c, unit, labels=labels, field=base.field, validate=verify)

    def tensor_coefficient(self, element, lam):
        return element.coords[self.index[tuple(sorted(lam))]]


def symmetric_power(A, n, verify=True, max_dim=DEFAULT_MAX_DIM):
    return SymmetricPowerAlgebra(A, n, verify=verify, max_dim=max_dim)


def diagonal_map(A, n, S=None):
    """``Delta_n(a) = sum_i 1 x ... x a x ... x 1`` as a map ``A -> S^n A``."""
    S = S or symmetric_power(A, n)
    u = A.unit_coords
    images = []
    for i in range(A.dim):
        coords = []
        for lam in S.multisets:
            total = A.field.coerce(0)
            for pos, k in enumerate(lam):
                if k == i:
                    total += prod((u[j] for q, j in enumerate(lam) if q != pos), start=A.field.coerce(1))
            coords.append(total)
        images.append(S.element(coords))
    return LinearMap.from_images(A, S, images)


def induced_ring_hom(f: LinearMap, n: int, S=None, table=None):
    """``Phi_n(f)/n!`` on S^n A: ``m_lambda -> orbit_size * Phi_n(f)(e_lambda) / n!``."""
    S = S or symmetric_power(f.domain, n)
    table = table or PhiTable(f)
    images = []
    for lam in S.multisets:
        images.append(table(lam) * Fraction(orbit_size(lam), factorial(n)))
    return LinearMap.from_images(S, f.codomain, images)


def check_induced_ring_hom(f: LinearMap, n: int, S=None, Delta=None):
    """Multiplicativity of ``Phi_n(f)/n!`` on all basis pairs and
    ``(Phi_n(f)/n!) o Delta_n == f``."""
    S = S or symmetric_power(f.domain, n)
    Delta = Delta or diagonal_map(f.domain, n, S)
    ft = induced_ring_hom(f, n, S)
    return all_of("induced_ring_hom", [_ring_hom_result(ft), _factorization_result(ft, Delta, f)])


def _ring_hom_result(ft):
    bad = ft.is_ring_hom()
    if bad is None:
        return passed("induced_multiplicative")
    return failed("induced_multiplicative", bad)


def _factorization_result(ft, Delta, f):
    comp = ft @ Delta
    for i in range(f.domain.dim):
        if comp.image_of_basis(i) != f.image_of_basis(i):
            return failed("induced_factorization", i, comp.image_of_basis(i))
    return passed("induced_factorization")
