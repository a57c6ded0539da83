"""Gorenstein decisions for lecture hall simplices via integer recurrences.

The cone over ``P(s)`` is the lecture hall cone of ``(s_1, .., s_n, 1)``, so
``P(s)`` is Gorenstein exactly when the chain

    c_1 = 1,   c_j s_{j-1} = c_{j-1} s_j + gcd(s_{j-1}, s_j)   (j = 2..n)
    c_{n+1} s_n = 1 + c_n

has an integer solution.  Every step forces ``c_j``, so a forward solve
either produces the unique certificate or fails at the first non-integer
quotient.  The vertex-cone criterion (chains on ``s`` and on its reversal,
valid when some adjacent pair is coprime) and the u-generated criterion
(all adjacent pairs coprime) are kept as cross-checks, with palindromicity
of h* as the oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Optional

from .errors import ConsistencyError
from .eulerian import hstar_by_ascents, is_palindromic
from .seqcore import SSequence, as_sequence


@dataclass(frozen=True)
class GorensteinCertificate:
    s: SSequence
    verdict: bool
    c: Optional[tuple[int, ...]] = None  # c_1..c_n, c_{n+1} when verdict holds
    d: Optional[tuple[int, ...]] = None
    u: Optional[tuple[int, ...]] = None
    u_reversed: Optional[tuple[int, ...]] = None
    vertex_cone_verdict: Optional[bool] = None  # None: criterion inapplicable
    palindromic: Optional[bool] = None
    notes: tuple[str, ...] = field(default=())

    def to_dict(self):
        return {
            "s": list(self.s.entries),
            "verdict": self.verdict,
            "c": _opt_list(self.c),
            "d": _opt_list(self.d),
            "u": _opt_list(self.u),
            "u_reversed": _opt_list(self.u_reversed),
            "vertex_cone_verdict": self.vertex_cone_verdict,
            "palindromic": self.palindromic,
            "notes": list(self.notes),
        }


def _opt_list(x):
    return None if x is None else list(x)


def solve_c_chain(s, with_tail: bool = False) -> Optional[tuple[int, ...]]:
    s = as_sequence(s).entries
    c = [1]
    for j in range(1, len(s)):
        num = c[-1] * s[j] + gcd(s[j - 1], s[j])
        if num % s[j - 1]:
            return None
        c.append(num // s[j - 1])
    if with_tail:
        num = 1 + c[-1]
        if num % s[-1]:
            return None
        c.append(num // s[-1])
    return tuple(c)


def chain_holds(s, c, with_tail: bool = False) -> bool:
    """Re-substitute a c-vector into its recurrence."""
    s = as_sequence(s).entries
    n = len(s)
    if len(c) != n + (1 if with_tail else 0) or c[0] != 1:
        return False
    for j in range(1, n):
        if c[j] * s[j - 1] != c[j - 1] * s[j] + gcd(s[j - 1], s[j]):
            return False
    if with_tail and c[n] * s[n - 1] != 1 + c[n - 1]:
        return False
    return all(x >= 1 for x in c)


def has_coprime_neighbours(s) -> bool:
    s = as_sequence(s).entries
    return any(gcd(a, b) == 1 for a, b in zip(s, s[1:]))


def all_coprime_neighbours(s) -> bool:
    s = as_sequence(s).entries
    return len(s) >= 2 and all(gcd(a, b) == 1 for a, b in zip(s, s[1:]))


def is_gorenstein(s) -> tuple[bool, GorensteinCertificate]:
    """Decide Gorenstein-ness by the tailed chain; needs no enumeration."""
    s = as_sequence(s)
    c = solve_c_chain(s, with_tail=True)
    cert = GorensteinCertificate(s=s, verdict=c is not None, c=c)
    if c is not None and not all(x >= 1 for x in c):
        raise ConsistencyError(f"non-positive certificate {c} for {s}", {"s": s.entries, "c": c})
    return cert.verdict, cert


def vertex_cone_gorenstein(s) -> Optional[tuple[bool, GorensteinCertificate]]:
    """Chains on ``s`` and its reversal, or ``None`` without a coprime neighbour pair."""
    s = as_sequence(s)
    if not has_coprime_neighbours(s):
        return None
    c = solve_c_chain(s)
    d = solve_c_chain(s.reversed())
    verdict = c is not None and d is not None
    return verdict, GorensteinCertificate(s=s, verdict=verdict, c=c, d=d,
                                          vertex_cone_verdict=verdict)


def u_generated_witness(s) -> Optional[tuple[int, ...]]:
    """``u`` with ``s_2 = u_1 s_1 - 1`` and ``s_{i+1} = u_i s_i - s_{i-1}``."""
    s = as_sequence(s).entries
    u = []
    for i in range(len(s) - 1):
        num = s[i + 1] + (s[i - 1] if i > 0 else 1)
        if num % s[i]:
            return None
        q = num // s[i]
        if q <= 0:
            return None
        u.append(q)
    return tuple(u)


def u_holds(s, u) -> bool:
    s = as_sequence(s).entries
    if len(u) != len(s) - 1 or any(x <= 0 for x in u):
        return False
    for i in range(len(u)):
        prev = s[i - 1] if i > 0 else 1
        if s[i + 1] != u[i] * s[i] - prev:
            return False
    return True


def classify(s, check: bool = True, budget=None) -> GorensteinCertificate:
    """Full certificate: tailed chain verdict plus every applicable cross-check.

    With ``check`` the verdict is compared against palindromicity of h*.
    Any disagreement between criteria raises :class:`ConsistencyError`.
    """
    s = as_sequence(s)
    verdict, cert = is_gorenstein(s)
    notes = ["decided by tailed recurrence"]
    d = solve_c_chain(s.reversed())
    vc = vertex_cone_gorenstein(s)
    vc_verdict = None
    if vc is not None:
        vc_verdict = vc[0]
        notes.append("vertex-cone criterion applicable")
        if vc_verdict != verdict:
            raise ConsistencyError(
                f"vertex-cone verdict {vc_verdict} != recurrence verdict {verdict} for {s}",
                {"s": s.entries, "c": cert.c, "d": d})
    u = u_generated_witness(s)
    u_rev = u_generated_witness(s.reversed())
    if all_coprime_neighbours(s):
        notes.append("u-generated criterion applicable")
        u_verdict = u is not None and u_rev is not None
        if u_verdict != verdict:
            raise ConsistencyError(
                f"u-generated verdict {u_verdict} != recurrence verdict {verdict} for {s}",
                {"s": s.entries, "u": u, "u_reversed": u_rev})
    palindromic = None
    if check:
        h = hstar_by_ascents(s, budget)
        palindromic = is_palindromic(h)
        if palindromic != verdict:
            raise ConsistencyError(
                f"recurrence verdict {verdict} but h* = {h} palindromic={palindromic} for {s}",
                {"s": s.entries, "c": cert.c, "hstar": h.coeffs})
    return replace(cert, d=d, u=u, u_reversed=u_rev, vertex_cone_verdict=vc_verdict,
                   palindromic=palindromic, notes=tuple(notes))


def verify_certificate(cert: GorensteinCertificate) -> bool:
    """Exact re-substitution of every vector carried by ``cert``."""
    s = cert.s
    if cert.verdict and (cert.c is None or not chain_holds(s, cert.c, with_tail=True)):
        return False
    if not cert.verdict and cert.c is not None and len(cert.c) == s.n + 1:
        return False
    if cert.d is not None and not chain_holds(s.reversed(), cert.d):
        return False
    if cert.u is not None and not u_holds(s, cert.u):
        return False
    if cert.u_reversed is not None and not u_holds(s.reversed(), cert.u_reversed):
        return False
    return True


def two_chain_criterion(s, shifted_gcd: bool = False) -> bool:
    """Both untailed chains (on ``s`` and its reversal) are solvable.

    ``shifted_gcd`` uses ``gcd(s_j, s_{j+1})`` in step ``j`` instead of
    ``gcd(s_{j-1}, s_j)``, reading the missing ``s_{n+1}`` as 1.
    """
    if not shifted_gcd:
        return solve_c_chain(s) is not None and solve_c_chain(as_sequence(s).reversed()) is not None
    return (_shifted_chain(as_sequence(s).entries) is not None
            and _shifted_chain(as_sequence(s).entries[::-1]) is not None)


def _shifted_chain(s):
    ext = tuple(s) + (1,)
    c = [1]
    for j in range(1, len(s)):
        num = c[-1] * s[j] + gcd(ext[j], ext[j + 1])
        if num % s[j - 1]:
            return None
        c.append(num // s[j - 1])
    return tuple(c)


@dataclass
class TwoChainFinding:
    s: tuple[int, ...]
    hstar: tuple[int, ...]
    palindromic: bool
    criterion: bool
    c: Optional[tuple[int, ...]]
    d: Optional[tuple[int, ...]]
    indexing: str


def two_chain_scan(sequences, budget=None) -> dict:
    """Compare the two-chain criterion with palindromicity where every
    adjacent gcd is at least 2.

    Both gcd indexings are evaluated.  Disagreements are returned as
    findings; nothing is asserted.
    """
    checked = 0
    findings = {"standard": [], "shifted": []}
    for s in sequences:
        s = as_sequence(s)
        if s.n < 2 or has_coprime_neighbours(s):
            continue
        checked += 1
        h = hstar_by_ascents(s, budget)
        pal = is_palindromic(h)
        for name, shifted in (("standard", False), ("shifted", True)):
            crit = two_chain_criterion(s, shifted_gcd=shifted)
            if crit != pal:
                if shifted:
                    c, d = _shifted_chain(s.entries), _shifted_chain(s.entries[::-1])
                else:
                    c, d = solve_c_chain(s), solve_c_chain(s.reversed())
                findings[name].append(TwoChainFinding(s.entries, h.trimmed, pal, crit, c, d, name))
    return {"checked": checked, "findings": findings}
