"""Symbolic Borel half of the deformed boson algebra and its dual.

Basis conventions
-----------------
The raising half is spanned by ordered monomials

    E[k, m, s] = q**(s*N/2) * Np**m * adag**k,     Np = N - (i*alpha/gamma) I,

with k, m non-negative integers and s a half-integer (stored as the
integer 2s).  The sub-family s = k is the natural basis of the algebra
generated by Np and the dressed raising element A = q**(N/2) adag; the
independent s is the minimal completion closed under both the product
and the coproduct (whose legs carry q**N factors that break the tie).

The dual is generated by the functionals nu and beta.  On tie elements
their values are the defining ones; on off-tie elements the values come
from the unique linear extension obtained by expanding

    q**(sigma*N/2) = exp(i*sigma*alpha/2) * sum_j (sigma*gamma/2)**j Np**j / j!

and applying the defining values termwise.  The sums collapse:

    nu (q**(sigma*N/2))          = exp(i*sigma*alpha/2) * (i*alpha/gamma + sigma/2)
    beta(q**(sigma*N/2) A-words) picks up exp(i*sigma*alpha/2) * q**(sigma/4).

Both closed forms are validated against the truncated series in the
test suite before anything else relies on them.

Products of functionals are evaluated through the coproduct: a word
f1 f2 ... fr applied to x is (f1 (x) ... (x) fr)(Delta_{r-1}(x)),
computed by recursive two-leg splitting.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .fockrep import FockRep, Window, residual
from .qscalars import DeformParams, ParameterError, half_index_product, q_number, q_power
from .report import IdentityReport, make_report

DEGREE_CAP = 8

Key = tuple  # (k, m, two_s)


class DegreeOverflowError(RuntimeError):
    """Raised when a product or coproduct would exceed the degree cap."""


def _check_cap(k: int, m: int, cap: int) -> None:
    if k > cap or m > cap:
        raise DegreeOverflowError(
            f"degree (k={k}, m={m}) exceeds cap {cap}; raise the cap explicitly")


class PlusElement:
    """Finite linear combination of E[k, m, s] basis monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {key: complex(c) for key, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "PlusElement":
        return cls()

    @classmethod
    def unit(cls) -> "PlusElement":
        return cls({(0, 0, 0): 1.0})

    @classmethod
    def basis(cls, k: int, m: int, s: float) -> "PlusElement":
        """E[k, m, s]; s may be any half-integer."""
        two_s = round(2 * s)
        if k < 0 or m < 0 or abs(2 * s - two_s) > 1e-12:
            raise ParameterError("basis indices must be k, m >= 0 and s a half-integer")
        return cls({(k, m, int(two_s)): 1.0})

    @classmethod
    def tie_basis(cls, k: int, m: int) -> "PlusElement":
        """The tie-family basis element with s = k."""
        return cls.basis(k, m, k)

    @classmethod
    def n_prime(cls) -> "PlusElement":
        return cls.basis(0, 1, 0)

    @classmethod
    def a_dressed(cls) -> "PlusElement":
        """A = q**(N/2) adag."""
        return cls.basis(1, 0, 1)

    def items(self):
        return self.terms.items()

    def __add__(self, other: "PlusElement") -> "PlusElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0.0) + c
        return PlusElement(out)

    def __sub__(self, other: "PlusElement") -> "PlusElement":
        return self + other.scaled(-1.0)

    def scaled(self, z: complex) -> "PlusElement":
        return PlusElement({key: z * c for key, c in self.terms.items()})

    def coeff(self, k: int, m: int, s: float) -> complex:
        return self.terms.get((k, m, round(2 * s)), 0.0)

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __repr__(self):
        body = " + ".join(f"({c:.4g})*E[{k},{m},{t / 2:g}]"
                          for (k, m, t), c in sorted(self.terms.items()))
        return body or "0"


class TensorPlusElement:
    """Element of the tensor square, keyed by pairs of basis keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {key: complex(c) for key, c in (terms or {}).items() if c != 0}

    def items(self):
        return self.terms.items()

    def __add__(self, other: "TensorPlusElement") -> "TensorPlusElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0.0) + c
        return TensorPlusElement(out)

    def __sub__(self, other: "TensorPlusElement") -> "TensorPlusElement":
        return self + other.scaled(-1.0)

    def scaled(self, z: complex) -> "TensorPlusElement":
        return TensorPlusElement({key: z * c for key, c in self.terms.items()})

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)


# ---------------------------------------------------------------------------
# normal-ordered product


def _mul_keys(key1: Key, key2: Key, p: DeformParams, cap: int) -> dict:
    """Product of two basis monomials in normal order.

    Moving adag**k1 through the q-power contributes q**(-s2*k1/2);
    moving it through Np**m2 shifts Np -> Np - k1, expanded binomially.
    """
    k1, m1, t1 = key1
    k2, m2, t2 = key2
    _check_cap(k1 + k2, m1 + m2, cap)
    scale = q_power(-t2 * k1 / 4.0, p)  # exponent -(s2/2)*k1 with s2 = t2/2
    out: dict = {}
    for j in range(m2 + 1):
        coeff = scale * math.comb(m2, j) * ((-k1) ** (m2 - j))
        key = (k1 + k2, m1 + j, t1 + t2)
        out[key] = out.get(key, 0.0) + coeff
    return out


def multiply(x: PlusElement, y: PlusElement, p: DeformParams,
             cap: int = DEGREE_CAP) -> PlusElement:
    out: dict = {}
    for key1, c1 in x.terms.items():
        for key2, c2 in y.terms.items():
            for key, c in _mul_keys(key1, key2, p, cap).items():
                out[key] = out.get(key, 0.0) + c1 * c2 * c
    return PlusElement(out)


def _tensor_multiply(xt: TensorPlusElement, yt: TensorPlusElement,
                     p: DeformParams, cap: int) -> TensorPlusElement:
    out: dict = {}
    for (a1, a2), ca in xt.terms.items():
        for (b1, b2), cb in yt.terms.items():
            left = _mul_keys(a1, b1, p, cap)
            right = _mul_keys(a2, b2, p, cap)
            for kl, cl in left.items():
                for kr, cr in right.items():
                    key = (kl, kr)
                    out[key] = out.get(key, 0.0) + ca * cb * cl * cr
    return TensorPlusElement(out)


# ---------------------------------------------------------------------------
# coproduct


@functools.lru_cache(maxsize=None)
def _coproduct_key(key: Key, p: DeformParams, cap: int) -> TensorPlusElement:
    """Delta(E[k, m, s]) expanded in the tensor basis.

    Legs: Delta(q**(sN/2)) = e^{-is alpha/2} q**(sN/2) (x) q**(sN/2),
    Delta(Np) = Np (x) 1 + 1 (x) Np, and
    Delta(adag) = (adag (x) q**(N/2) + i q**(-N/2) (x) adag) e^{-i alpha/2}.
    """
    k, m, t = key
    _check_cap(k, m, cap)
    unit_key = (0, 0, 0)
    phase = complex(np.exp(-1j * (t / 4.0) * p.alpha))  # e^{-is alpha/2}, s = t/2
    out = TensorPlusElement({((0, 0, t), (0, 0, t)): phase})
    dn = TensorPlusElement({((0, 1, 0), unit_key): 1.0, (unit_key, (0, 1, 0)): 1.0})
    for _ in range(m):
        out = _tensor_multiply(out, dn, p, cap)
    ph = complex(np.exp(-1j * p.alpha / 2.0))
    da = TensorPlusElement({((1, 0, 0), (0, 0, 2)): ph,
                            ((0, 0, -2), (1, 0, 0)): 1j * ph})
    for _ in range(k):
        out = _tensor_multiply(out, da, p, cap)
    return out


def coproduct_sym(x: PlusElement, p: DeformParams, cap: int = DEGREE_CAP) -> TensorPlusElement:
    out = TensorPlusElement()
    for key, c in x.terms.items():
        out = out + _coproduct_key(key, p, cap).scaled(c)
    return out


def antipode_sym_inv(x: PlusElement, p: DeformParams, cap: int = DEGREE_CAP) -> PlusElement:
    """Inverse antipode: S^{-1}(adag) = -q**(-1/2) adag, S^{-1}(Np) = -Np,
    S^{-1}(q**(sN/2)) = e^{is alpha} q**(-sN/2); antihomomorphic order."""
    out = PlusElement()
    for (k, m, t), c in x.terms.items():
        coeff = c * ((-1.0) ** (k + m)) * q_power(-k / 2.0, p) \
            * complex(np.exp(1j * (t / 2.0) * p.alpha))
        elem = PlusElement({(k, 0, 0): coeff})
        elem = multiply(elem, PlusElement({(0, m, 0): 1.0}), p, cap)
        elem = multiply(elem, PlusElement({(0, 0, -t): 1.0}), p, cap)
        out = out + elem
    return out


# ---------------------------------------------------------------------------
# dual functionals
#
# atomic functionals: ("eps",), ("nu",), ("nu_prime",), ("beta",), ("qnu", c)
# with ("qnu", c) denoting q**(c*nu).

EPS = ("eps",)
NU = ("nu",)
NU_PRIME = ("nu_prime",)
BETA = ("beta",)


def qnu(c: float) -> tuple:
    return ("qnu", float(c))


def eval_atomic(f: tuple, key: Key, p: DeformParams) -> complex:
    """Closed-form value of one atomic functional on one basis monomial."""
    k, m, t = key
    s = t / 2.0
    iag = p.ialpha_over_gamma
    half_phase = complex(np.exp(1j * s * p.alpha / 2.0))
    name = f[0]
    if name == "eps":
        return half_phase if (k == 0 and m == 0) else 0.0
    if name == "nu":
        if k != 0:
            return 0.0
        if m == 0:
            return half_phase * (iag + s / 2.0)
        if m == 1:
            return half_phase / p.gamma
        return 0.0
    if name == "nu_prime":
        if k != 0:
            return 0.0
        if m == 0:
            return half_phase * (s / 2.0)
        if m == 1:
            return half_phase / p.gamma
        return 0.0
    if name == "beta":
        if k != 1:
            return 0.0
        sigma = s - 1.0  # off-tie deviation relative to the tie s = k = 1
        ext = complex(np.exp(1j * sigma * p.alpha / 2.0)) * q_power(sigma / 4.0, p)
        return ext * complex(np.exp(-1j * p.alpha / 2.0)) / (2.0 ** m) / (1.0 + 1.0 / p.q)
    if name == "qnu":
        c = f[1]
        if k != 0:
            return 0.0
        return complex(np.exp(1j * c * p.alpha)) * half_phase * (c ** m if m else 1.0) \
            * q_power(c * s / 2.0, p)
    raise ParameterError(f"unknown atomic functional {f!r}")


@functools.lru_cache(maxsize=None)
def _eval_word_key(factors: tuple, key: Key, p: DeformParams, cap: int,
                   split: str) -> complex:
    if not factors:
        return eval_atomic(EPS, key, p)
    if len(factors) == 1:
        return eval_atomic(factors[0], key, p)
    total = 0.0 + 0.0j
    legs = _coproduct_key(key, p, cap)
    if split == "left":
        head, rest = factors[0], factors[1:]
        for (k1, k2), c in legs.terms.items():
            v = eval_atomic(head, k1, p)
            if v != 0:
                total += c * v * _eval_word_key(rest, k2, p, cap, split)
    else:
        init, last = factors[:-1], factors[-1]
        for (k1, k2), c in legs.terms.items():
            v = eval_atomic(last, k2, p)
            if v != 0:
                total += c * _eval_word_key(init, k1, p, cap, split) * v
    return total


def eval_word(factors, x: PlusElement, p: DeformParams, cap: int = DEGREE_CAP,
              split: str = "left") -> complex:
    """Evaluate the dual product f1 f2 ... fr on x via iterated coproducts.

    'split' chooses the recursion side; coassociativity makes the result
    independent of it, which the tests exercise directly.
    """
    return sum((c * _eval_word_key(tuple(factors), key, p, cap, split)
                for key, c in x.terms.items()), start=0.0 + 0.0j)


@dataclass(frozen=True)
class DualElement:
    """Finite combination of dual basis monomials (Np*)^m q**(-k nu/2) beta^k."""

    terms: tuple  # ordered tuple of ((k, m), coeff)

    @classmethod
    def from_dict(cls, d: dict) -> "DualElement":
        return cls(tuple(sorted((key, complex(c)) for key, c in d.items() if c != 0)))

    @classmethod
    def basis(cls, k: int, m: int) -> "DualElement":
        if k < 0 or m < 0:
            raise ParameterError("dual basis indices must be non-negative")
        return cls((((k, m), 1.0 + 0.0j),))


def dual_basis_factors(k: int, m: int) -> tuple:
    """Atomic factor list of (nu - i alpha/gamma)^m q**(-k nu/2) beta^k."""
    return (NU_PRIME,) * m + (qnu(-k / 2.0),) + (BETA,) * k


def eval_functional(f: DualElement, x: PlusElement, p: DeformParams,
                    cap: int = DEGREE_CAP) -> complex:
    out = 0.0 + 0.0j
    for (k, m), c in f.terms:
        _check_cap(k, m, cap)
        out += c * eval_word(dual_basis_factors(k, m), x, p, cap)
    return out


# ---------------------------------------------------------------------------
# pairing against the closed form


def pairing_closed_form(k: int, m: int, l: int, n: int, p: DeformParams) -> complex:
    """delta_{kl} delta_{mn} n! (-i)^k q^{k(k+1)/4} / gamma^n * prod_j [j/2]."""
    if k != l or m != n:
        return 0.0 + 0.0j
    return (math.factorial(n) * ((-1j) ** k) * q_power(k * (k + 1) / 4.0, p)
            / (p.gamma ** n) * half_index_product(k, p))


def pairing_gram(kmax: int, mmax: int, p: DeformParams,
                 cap: int = DEGREE_CAP) -> np.ndarray:
    """Gram matrix of the pairing over (k, m), (l, n) up to the caps."""
    pairs = [(k, m) for k in range(kmax + 1) for m in range(mmax + 1)]
    G = np.zeros((len(pairs), len(pairs)), dtype=complex)
    for i, (k, m) in enumerate(pairs):
        f = DualElement.basis(k, m)
        for j, (l, n) in enumerate(pairs):
            G[i, j] = eval_functional(f, PlusElement.tie_basis(l, n), p, cap)
    return G


def pairing_check(kmax: int, mmax: int, p: DeformParams, cap: int = DEGREE_CAP,
                  tol: float | None = None) -> IdentityReport:
    """Compare the dual-multiplication pairing with the closed form."""
    tol = tol if tol is not None else p.tol
    dev = 0.0
    for k in range(kmax + 1):
        for m in range(mmax + 1):
            f = DualElement.basis(k, m)
            for l in range(kmax + 1):
                for n in range(mmax + 1):
                    got = eval_functional(f, PlusElement.tie_basis(l, n), p, cap)
                    want = pairing_closed_form(k, m, l, n, p)
                    dev = max(dev, abs(got - want))
    return make_report("pairing_eqn", {"kmax": kmax, "mmax": mmax, "q": str(p.q)},
                       [kmax + 1, mmax + 1], kmax, dev, dev, tol)


def dual_bracket_check(p: DeformParams, lmax: int = 4, nmax: int = 4,
                       cap: int = DEGREE_CAP, tol: float | None = None) -> IdentityReport:
    """[nu, beta] + beta evaluates to zero on every tie basis element."""
    tol = tol if tol is not None else p.tol
    dev = 0.0
    for l in range(lmax + 1):
        for n in range(nmax + 1):
            x = PlusElement.tie_basis(l, n)
            v = (eval_word((NU, BETA), x, p, cap)
                 - eval_word((BETA, NU), x, p, cap)
                 + eval_word((BETA,), x, p, cap))
            dev = max(dev, abs(v))
    return make_report("dual_bracket", {"lmax": lmax, "nmax": nmax, "q": str(p.q)},
                       [lmax + 1, nmax + 1], lmax, dev, dev, tol)


def dual_hopf_check(p: DeformParams, deg: int = 3, cap: int = DEGREE_CAP,
                    tol: float | None = None) -> IdentityReport:
    """Duality of the opposite dual coproduct and inverse antipode.

    (T Delta0(f), x (x) y) = (f, y x) for f in {nu, beta}, and
    ((S0)^{-1}(f), x) = (f, S^{-1}(x)).
    """
    tol = tol if tol is not None else p.tol
    iag = p.ialpha_over_gamma
    ph = complex(np.exp(-1j * p.alpha / 2.0))
    basis = [PlusElement.tie_basis(l, n)
             for l in range(deg + 1) for n in range(deg + 1)]
    ev = lambda f, z: eval_word((f,), z, p, cap)
    dev = 0.0
    for x in basis:
        sx = antipode_sym_inv(x, p, cap)
        dev = max(dev, abs(-ev(NU, x) + 2 * iag * ev(EPS, x) - ev(NU, sx)))
        dev = max(dev, abs(-q_power(-0.5, p) * ev(BETA, x) - ev(BETA, sx)))
        for y in basis:
            yx = multiply(y, x, p, cap)
            lhs_nu = ev(NU, x) * ev(EPS, y) + ev(EPS, x) * ev(NU, y) \
                - iag * ev(EPS, x) * ev(EPS, y)
            dev = max(dev, abs(lhs_nu - ev(NU, yx)))
            lhs_beta = ph * (ev(BETA, x) * ev(qnu(0.5), y)
                             + 1j * ev(qnu(-0.5), x) * ev(BETA, y))
            dev = max(dev, abs(lhs_beta - ev(BETA, yx)))
    return make_report("dual_hopf", {"deg": deg, "q": str(p.q)},
                       [deg + 1, deg + 1], deg, dev, dev, tol)


# ---------------------------------------------------------------------------
# quantum-double straightening


def _s0_inv_atomic(f: tuple, p: DeformParams) -> list[tuple[complex, tuple]]:
    """(S0)^{-1} on atomic dual functionals, as a linear combination."""
    name = f[0]
    if name == "eps":
        return [(1.0, EPS)]
    if name == "nu":
        return [(-1.0, NU), (2.0 * p.ialpha_over_gamma, EPS)]
    if name == "beta":
        return [(-q_power(-0.5, p), BETA)]
    if name == "qnu":
        c = f[1]
        return [(complex(np.exp(2j * c * p.alpha)), qnu(-c))]
    raise ParameterError(f"no inverse-antipode rule for {f!r}")


def _dual_triple(fname: str, p: DeformParams) -> list[tuple[complex, tuple, tuple, tuple]]:
    """(T Delta0)_2 of a dual generator as explicit three-leg terms."""
    iag = p.ialpha_over_gamma
    if fname == "nu":
        return [(1.0, NU, EPS, EPS), (1.0, EPS, NU, EPS), (1.0, EPS, EPS, NU),
                (-2.0 * iag, EPS, EPS, EPS)]
    if fname == "beta":
        em = complex(np.exp(-1j * p.alpha))
        up, dn = qnu(0.5), qnu(-0.5)
        return [(em, BETA, up, up), (em * 1j, dn, BETA, up), (1j, dn, dn, BETA)]
    raise ParameterError("straightening is defined for the generators nu, beta")


def _coproduct3(x: PlusElement, p: DeformParams, cap: int) -> dict:
    """(Delta (x) id) Delta(x) as a dict of key triples."""
    out: dict = {}
    for (key1, key2), c in coproduct_sym(x, p, cap).terms.items():
        for (key1a, key1b), c1 in _coproduct_key(key1, p, cap).terms.items():
            key = (key1a, key1b, key2)
            out[key] = out.get(key, 0.0) + c * c1
    return out


DUAL_WORD_GENS = {EPS: (0, 0, 0), NU: (0, 1, 0), BETA: (0, 0, 1)}


def _dual_word_key(f: tuple) -> tuple:
    """Encode an atomic dual leg as (2c, nu-power, beta-power) of q^{c nu} nu^a beta^b."""
    if f[0] == "qnu":
        return (round(2 * f[1]), 0, 0)
    return DUAL_WORD_GENS[f]


def dual_word_factors(dword: tuple) -> tuple:
    two_c, npow, bpow = dword
    fs: tuple = ()
    if two_c:
        fs += (qnu(two_c / 2.0),)
    return fs + (NU,) * npow + (BETA,) * bpow


def straighten_cross(fname: str, xname: str, p: DeformParams,
                     cap: int = DEGREE_CAP) -> dict:
    """Normal-order the cross product (dual generator) * (algebra generator).

    Returns a dict keyed by (primal basis key, dual word key) mapping to
    coefficients, representing sum_i x_i * f_i in the double.  The dual
    word keys encode q**(c nu) nu^a beta^b; for the pair (beta, A) the
    q**(+-nu/2)-dressed legs leave the polynomial dual basis and are
    returned in this dressed form.
    """
    x = {"nprime": PlusElement.n_prime(), "araise": PlusElement.a_dressed()}[xname]
    legs3 = _coproduct3(x, p, cap)
    duals3 = _dual_triple(fname, p)
    out: dict = {}
    for (x1, x2, x3), cx in legs3.items():
        for cf, f1, f2, f3 in duals3:
            v3 = eval_atomic(f3, x3, p)
            if v3 == 0:
                continue
            v1 = sum(ci * eval_atomic(fi, x1, p) for ci, fi in _s0_inv_atomic(f1, p))
            if v1 == 0:
                continue
            key = (x2, _dual_word_key(f2))
            out[key] = out.get(key, 0.0) + cx * cf * v1 * v3
    return {key: c for key, c in out.items() if abs(c) > 0.0}


def cross_terms_difference(lhs: dict, rhs: dict, p: DeformParams,
                           grid: int = 3, cap: int = DEGREE_CAP) -> float:
    """Max deviation between two x*f term dicts, as elements of the double.

    Terms are grouped by primal key and the dual parts compared by
    evaluating on all tie basis elements up to the grid degree.
    """
    keys = set(lhs) | set(rhs)
    primal_keys = {key[0] for key in keys}
    dev = 0.0
    for pk in primal_keys:
        duals: dict = {}
        for (xk, dw), c in lhs.items():
            if xk == pk:
                duals[dw] = duals.get(dw, 0.0) + c
        for (xk, dw), c in rhs.items():
            if xk == pk:
                duals[dw] = duals.get(dw, 0.0) - c
        for l in range(grid + 1):
            for n in range(grid + 1):
                x = PlusElement.tie_basis(l, n)
                v = sum(c * eval_word(dual_word_factors(dw), x, p, cap)
                        for dw, c in duals.items())
                dev = max(dev, abs(v))
    return dev


# ---------------------------------------------------------------------------
# representation bridge


def to_matrix(x: PlusElement, rep: FockRep) -> np.ndarray:
    """Represent a symbolic element on a truncated Fock space."""
    p = rep.params
    nd = rep.n_diag()
    npr = np.diag(rep.nprime_diag())
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for (k, m, t), c in x.terms.items():
        term = np.diag(q_power((t / 4.0) * nd, p))
        term = term @ np.linalg.matrix_power(npr, m)
        term = term @ np.linalg.matrix_power(rep.matAdag, k)
        out += c * term
    return out


def quotient_cross_check(rep: FockRep, window: Window | None = None,
                         tol: float | None = None) -> IdentityReport:
    """Cross relations of the double under nu -> N, beta -> a.

    With nu = N the mixed bracket reduces to the symmetrized defining
    relation, so this requires the Hopf-compatible shift c = 1/2.
    """
    if rep.c != 0.5:
        raise ParameterError("quotient identification requires c = 1/2")
    p = rep.params
    tol = tol if tol is not None else p.tol
    D = rep.dim
    win = window or Window(D - 2, guard=1)
    N, a, ad = rep.matN, rep.matA, rep.matAdag
    nd = rep.n_diag()
    checks = {
        "comm_N_nu": (N @ N - N @ N, np.zeros((D, D), dtype=complex)),
        "comm_N_beta": (N @ a - a @ N, -a),
        "comm_nu_adag": (N @ ad - ad @ N, ad),
        "mixed_bracket": (a @ ad - ad @ a,
                          np.diag(q_number((2 * nd + 1) / 2.0, p)
                                  - q_number((2 * nd - 1) / 2.0, p))),
    }
    worst_raw = worst = 0.0
    for lhs, rhs in checks.values():
        raw, nrm = residual(lhs, rhs, (D,), win)
        worst_raw, worst = max(worst_raw, raw), max(worst, nrm)
    return make_report("quotient_cross", {"q": str(p.q), "c": str(rep.c)},
                       [D], win.max_index, worst_raw, worst, tol)
