"""Explicit bijections and exhaustive checks that they are bijections."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import compositions as comp
from .avoid import iter_avoiders
from .matching import contains
from .rgs import Rgs, all_rgs, as_rgs


class NotAvoiding(ValueError):
    pass


@dataclass
class BijectionReport:
    name: str
    n: int
    domain_count: int
    codomain_count: int
    is_bijective: bool
    counterexample: tuple | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "domain_count": self.domain_count,
            "codomain_count": self.codomain_count,
            "is_bijective": self.is_bijective,
            "counterexample": None if self.counterexample is None
            else [str(x) if not isinstance(x, str) else x for x in self.counterexample],
            **self.details,
        }


def check_map(name: str, n: int, domain: Iterable, fn: Callable, codomain: Iterable,
              same: Callable | None = None) -> BijectionReport:
    """Exhaustive bijectivity check of ``fn`` from ``domain`` onto ``codomain``.

    ``same(x, y)`` optionally adds a per-element condition (e.g. equal
    block counts); a failure counts as a counterexample.
    """
    dom = list(domain)
    cod = set(codomain)
    seen: dict = {}
    bad = None
    for x in dom:
        y = fn(x)
        if y not in cod:
            bad = ("outside codomain", x, y)
            break
        if same is not None and not same(x, y):
            bad = ("condition fails", x, y)
            break
        if y in seen:
            bad = ("collision", seen[y], x, y)
            break
        seen[y] = x
    if bad is None and len(seen) != len(cod):
        missed = min(cod - set(seen))
        bad = ("missed", missed)
    return BijectionReport(name, n, len(dom), len(cod), bad is None, bad)


# --- 122 -> 123 -------------------------------------------------------------------

def f_122_to_123(p) -> Rgs:
    """Keep the 1s and send every other letter to 2."""
    p = as_rgs(p)
    if contains(p, "122"):
        raise NotAvoiding(f"{p} contains 122")
    return Rgs(1 if x == 1 else 2 for x in p)


def verify_f_bijection(max_n: int) -> list[BijectionReport]:
    return [check_map("f: P_n(122) -> P_n(123)", n, iter_avoiders(["122"], n),
                      f_122_to_123, iter_avoiders(["123"], n))
            for n in range(max_n + 1)]


def verify_lemma_122(tau, max_n: int) -> BijectionReport:
    """pi contains tau iff f(pi) contains f(tau), for all 122-avoiders up to max_n.

    The report covers the induced map P_n(122, tau) -> P_n(123, f(tau)) at
    n = max_n; containment equivalence is checked for every n <= max_n and
    a failure there becomes the counterexample.
    """
    tau = as_rgs(tau)
    if contains(tau, "122") or tau.num_blocks < 2:
        raise comp.PreconditionViolated(f"{tau} must avoid 122 and have at least two blocks")
    ftau = f_122_to_123(tau)
    checked = 0
    for n in range(max_n + 1):
        for p in iter_avoiders(["122"], n):
            checked += 1
            if contains(p, tau) != contains(f_122_to_123(p), ftau):
                return BijectionReport(f"f keeps containment of {tau}", n, 0, 0, False,
                                       ("containment differs", p, f_122_to_123(p)),
                                       {"checked": checked})
    rep = check_map(f"f: P_n(122,{tau}) -> P_n(123,{ftau})", max_n,
                    iter_avoiders(["122", tau], max_n), f_122_to_123,
                    iter_avoiders(["123", ftau], max_n))
    rep.details["checked"] = checked
    return rep


# --- compositions --------------------------------------------------------------------

def verify_composition_bijections(max_a: int, max_b: int,
                                  multi1: Callable = comp.bijection_multi1,
                                  multi2: Callable = comp.bijection_multi2) -> list[BijectionReport]:
    """Check both composition maps for every applicable a with |a| <= max_a.

    One report per (a, r) for the reversal map and per a ending in 2 for
    the merge map, aggregated over all b with |b| <= max_b.  The map
    arguments exist so a deliberately broken map can be plugged in.
    """
    reports = []
    for size in range(1, max_a + 1):
        for a in comp.compositions(size):
            for r in range(1, len(a)):
                a2 = comp.swap(a, r)
                reports.append(_agg(
                    f"reverse a={comp.format_composition(a)} r={r}", max_b,
                    lambda n: (b for b in comp.compositions(n) if comp.dominates(a, b)),
                    lambda b, a=a, r=r: multi1(b, a, r),
                    lambda n: (b for b in comp.compositions(n) if comp.dominates(a2, b))))
            if a[-1] == 2:
                a2 = a[:-1] + (1, 1)
                reports.append(_agg(
                    f"merge a={comp.format_composition(a)}", max_b,
                    lambda n: (b for b in comp.compositions(n) if not comp.dominates(a, b)),
                    lambda b, a=a: multi2(b, a),
                    lambda n: (b for b in comp.compositions(n) if not comp.dominates(a2, b))))
    return reports


def _agg(name, max_n, domain, fn, codomain) -> BijectionReport:
    dom_total = cod_total = 0
    for n in range(max_n + 1):
        r = check_map(name, n, domain(n), fn, codomain(n))
        dom_total += r.domain_count
        cod_total += r.codomain_count
        if not r.is_bijective:
            return BijectionReport(name, n, dom_total, cod_total, False, r.counterexample)
    return BijectionReport(name, max_n, dom_total, cod_total, True)


# --- block-preserving maps onto (1123,1233) and (1123,1232) ------------------------

def _split_1231_1233(p: Rgs):
    """Read p = 1^a 2 alpha 3 2^b 4 5 ... k; return (a, alpha, b, k)."""
    k = p.num_blocks
    i = 0
    while p[i] == 1:
        i += 1
    a = i
    i += 1  # the first 2
    j = p.index(3)
    alpha = tuple(p[i:j])
    i = j + 1
    b = 0
    while i < len(p) and p[i] == 2:
        b += 1
        i += 1
    if tuple(p[i:]) != tuple(range(4, k + 1)) or any(x > 2 for x in alpha):
        raise NotAvoiding(f"{p} is not of the form 1^a 2 alpha 3 2^b 4 ... k")
    return a, alpha, b, k


def block_map_prime(p) -> Rgs:
    """1^a 2 alpha 3 2^b 45..k  ->  12..(k-1) 2^(a-1) 1^b k alpha (k >= 3)."""
    p = as_rgs(p)
    if p.num_blocks < 3:
        return p
    a, alpha, b, k = _split_1231_1233(p)
    return Rgs(tuple(range(1, k)) + (2,) * (a - 1) + (1,) * b + (k,) + alpha)


def block_map_double_prime(p) -> Rgs:
    """1^a 2 alpha 3 2^b 45..k  ->  12..(k-2) (k-1)^(b+1) 1^(a-1) k alpha', with 2 -> k in alpha'."""
    p = as_rgs(p)
    if p.num_blocks < 3:
        return p
    a, alpha, b, k = _split_1231_1233(p)
    alpha2 = tuple(k if x == 2 else x for x in alpha)
    return Rgs(tuple(range(1, k - 1)) + (k - 1,) * (b + 1) + (1,) * (a - 1) + (k,) + alpha2)


def verify_block_maps(max_n: int) -> list[BijectionReport]:
    same_blocks = lambda x, y: x.num_blocks == y.num_blocks
    out = []
    for name, fn, target in [("pi -> pi'", block_map_prime, ["1123", "1233"]),
                             ("pi -> pi''", block_map_double_prime, ["1123", "1232"])]:
        for n in range(max_n + 1):
            out.append(check_map(f"{name}: P_n(1231,1233) -> P_n({','.join(target)})", n,
                                 iter_avoiders(["1231", "1233"], n), fn,
                                 iter_avoiders(target, n), same=same_blocks))
    return out


def verify_partial_binomial_rows(k: int, max_n: int) -> list[tuple[int, int, int]]:
    """(n, |P_n(122,1^k)|, |P_n(122,12..k)|) rows, for comparison with the binomial sum."""
    ones = "1" * k
    incr = "".join(map(str, range(1, k + 1))) if k <= 9 else ",".join(map(str, range(1, k + 1)))
    return [(n, sum(1 for _ in iter_avoiders(["122", ones], n)),
             sum(1 for _ in iter_avoiders(["122", incr], n)))
            for n in range(max_n + 1)]


def brute_avoiders(patterns: Sequence, n: int) -> list[Rgs]:
    """Avoiders by filtering every partition of [n]; slow, for cross-checks."""
    pats = [as_rgs(p) for p in patterns]
    return [p for p in all_rgs(n) if not any(contains(p, q) for q in pats)]
