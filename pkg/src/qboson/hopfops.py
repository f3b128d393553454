"""Coproduct, counit and antipode as concrete operators on tensor products.

Two computation paths coexist:

* matrix path: Delta(word) is the product of the generators' coproduct
  matrices (Delta is an algebra homomorphism), used wherever a plain
  operator on the tensor square suffices;
* symbolic path: a word is expanded into an explicit sum of tensor
  products of generator words (Sweedler summands).  The multiplication
  map m in the antipode axiom and the leg-wise counit contractions are
  not conjugations of the representation, so they act on this expansion.

The general structure family is parameterized by a half-integer m, an
integer K and a sign choice; the canonical structure is the point
(m = 1/2, K = -2*kappa - 1, lower).  The phase multiplying the raising
coproduct is exp(-i*pi*(2K+1)*(m +- 1)/2): with the opposite sign the
counit axiom fails and the canonical point does not reproduce the
canonical coproducts, so that sign is fixed by consistency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fockrep import FockRep, Window, residual
from .qscalars import DeformParams, ParameterError, q_power
from .report import IdentityReport, make_report

# a word letter is "N" | "a" | "adag" | ("qpow", s) with s the exponent in q^{sN}


def qpow(s: float) -> tuple[str, float]:
    """Word letter for q**(s*N)."""
    return ("qpow", float(s))


@dataclass(frozen=True)
class GenWord:
    """Ordered product of generator letters with a scalar prefactor."""

    letters: tuple = ()
    prefactor: complex = 1.0 + 0.0j

    def __post_init__(self):
        for ltr in self.letters:
            ok = ltr in ("N", "a", "adag") or (
                isinstance(ltr, tuple) and len(ltr) == 2 and ltr[0] == "qpow")
            if not ok:
                raise ParameterError(f"unknown word letter {ltr!r}")

    def __mul__(self, other: "GenWord") -> "GenWord":
        return GenWord(self.letters + other.letters, self.prefactor * other.prefactor)

    def scaled(self, z: complex) -> "GenWord":
        return GenWord(self.letters, self.prefactor * z)

    @property
    def name(self) -> str:
        if not self.letters:
            return "1"
        return ".".join(l if isinstance(l, str) else f"q^{l[1]}N" for l in self.letters)


def word(*letters) -> GenWord:
    return GenWord(tuple(letters))


@dataclass(frozen=True)
class HopfFamily:
    """One member of the coproduct family, with its deformation parameters.

    beta_const = i*pi*(2K+1)/(2*gamma) is the constant entering
    Delta(N) = N(x)I + I(x)N + beta_const; at the canonical point it
    equals -i*alpha/gamma.
    """

    m: float
    K: int
    sign: str
    params: DeformParams
    beta_const: complex = field(init=False)

    def __post_init__(self):
        if self.sign not in ("upper", "lower"):
            raise ParameterError("sign must be 'upper' or 'lower'")
        if abs(2 * self.m - round(2 * self.m)) > 1e-12:
            raise ParameterError("m must be an integer or half-integer")
        object.__setattr__(
            self, "beta_const",
            1j * math.pi * (2 * self.K + 1) / (2 * self.params.gamma))

    @classmethod
    def canonical(cls, p: DeformParams) -> "HopfFamily":
        return cls(m=0.5, K=-2 * p.kappa - 1, sign="lower", params=p)

    def is_canonical(self) -> bool:
        return (self.m == 0.5 and self.K == -2 * self.params.kappa - 1
                and self.sign == "lower")

    # sign-resolved constants -------------------------------------------------
    @property
    def pm(self) -> float:
        return 1.0 if self.sign == "upper" else -1.0

    @property
    def r(self) -> float:
        """The exponent m +- 1."""
        return self.m + self.pm

    @property
    def sg(self) -> complex:
        """+-(-1)^K, the sign on the second coproduct summand."""
        return self.pm * (-1.0) ** self.K

    @property
    def phase_lower_gen(self) -> complex:
        """Phase of the coproduct of the lowering generator."""
        return complex(np.exp(1j * math.pi * (2 * self.K + 1) * self.m / 2))

    @property
    def phase_raise_gen(self) -> complex:
        """Phase of the coproduct of the raising generator (consistency-fixed sign)."""
        return complex(np.exp(-1j * math.pi * (2 * self.K + 1) * self.r / 2))

    def counit_N(self) -> complex:
        return -self.beta_const

    def antipode_N_shift(self) -> complex:
        """S(N) = -N + shift, with shift = -2*beta_const."""
        return -2.0 * self.beta_const


# ---------------------------------------------------------------------------
# tensor helpers


def kron_all(*mats: np.ndarray) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def tensor_swap(D1: int, D2: int) -> np.ndarray:
    """Permutation matrix sending |i>|j> to |j>|i>."""
    P = np.zeros((D1 * D2, D1 * D2))
    for i in range(D1):
        for j in range(D2):
            P[j * D1 + i, i * D2 + j] = 1.0
    return P


# ---------------------------------------------------------------------------
# representation of abstract words


def rep_letter(letter, rep: FockRep, p: DeformParams) -> np.ndarray:
    if letter == "N":
        return rep.matN
    if letter == "a":
        return rep.matA
    if letter == "adag":
        return rep.matAdag
    return np.diag(q_power(letter[1] * rep.n_diag(), p))


def rep_word(w: GenWord, rep: FockRep, p: DeformParams | None = None) -> np.ndarray:
    """Matrix of a word; q-powers use p (defaults to the rep's parameters)."""
    p = p or rep.params
    out = np.eye(rep.dim, dtype=complex) * w.prefactor
    for ltr in w.letters:
        out = out @ rep_letter(ltr, rep, p)
    return out


# ---------------------------------------------------------------------------
# coproduct / counit / antipode on letters and words


def _delta_n_diag(rep1: FockRep, rep2: FockRep, fam: HopfFamily) -> np.ndarray:
    """Diagonal of Delta(N) on the tensor square."""
    n1, n2 = rep1.n_diag(), rep2.n_diag()
    return (np.add.outer(n1, n2).reshape(-1) + fam.beta_const)


def delta_letter(letter, rep1: FockRep, rep2: FockRep, fam: HopfFamily) -> np.ndarray:
    p = fam.params
    D1, D2 = rep1.dim, rep2.dim
    I1 = np.eye(D1, dtype=complex)
    I2 = np.eye(D2, dtype=complex)
    if letter == "N":
        return (np.kron(rep1.matN, I2) + np.kron(I1, rep2.matN)
                + fam.beta_const * np.eye(D1 * D2, dtype=complex))
    if isinstance(letter, tuple):  # q^{sN}: exact diagonal exponential of Delta(N)
        return np.diag(q_power(letter[1] * _delta_n_diag(rep1, rep2, fam), p))
    qd1 = lambda s: np.diag(q_power(s * rep1.n_diag(), p))
    qd2 = lambda s: np.diag(q_power(s * rep2.n_diag(), p))
    if letter == "a":
        return (np.kron(rep1.matA, qd2(fam.m))
                + fam.sg * 1j * np.kron(qd1(fam.r), rep2.matA)) * fam.phase_lower_gen
    # adag
    return (np.kron(rep1.matAdag, qd2(-fam.r))
            + fam.sg * 1j * np.kron(qd1(-fam.m), rep2.matAdag)) * fam.phase_raise_gen


def coproduct_op(w: GenWord, rep1: FockRep, rep2: FockRep, fam: HopfFamily,
                 check_params: bool = True) -> np.ndarray:
    """Delta applied letterwise and multiplied in word order."""
    if check_params and not (rep1.params.q == rep2.params.q == fam.params.q):
        raise ParameterError("representations and family must share DeformParams")
    D = rep1.dim * rep2.dim
    out = np.eye(D, dtype=complex) * w.prefactor
    for ltr in w.letters:
        out = out @ delta_letter(ltr, rep1, rep2, fam)
    return out


def counit(w: GenWord, fam: HopfFamily) -> complex:
    """Multiplicative extension of the generator counits."""
    out = complex(w.prefactor)
    for ltr in w.letters:
        if ltr in ("a", "adag"):
            return 0.0 + 0.0j
        if ltr == "N":
            out *= fam.counit_N()
        else:
            out *= complex(np.exp(ltr[1] * fam.counit_N() * fam.params.gamma))
    return out


def antipode_letter(letter, rep: FockRep, fam: HopfFamily) -> np.ndarray:
    p = fam.params
    shift = fam.antipode_N_shift()
    sn_diag = -rep.n_diag() + shift  # diagonal of S(N)
    if letter == "N":
        return np.diag(sn_diag)
    if isinstance(letter, tuple):
        return np.diag(q_power(letter[1] * sn_diag, p))
    qd = lambda s: np.diag(q_power(s * rep.n_diag(), p))
    qds = lambda s: np.diag(q_power(s * sn_diag, p))
    if letter == "a":
        return fam.sg * 1j * qd(-fam.r) @ rep.matA @ qds(fam.m)
    return fam.sg * 1j * qd(fam.m) @ rep.matAdag @ qds(-fam.r)


def antipode_op(w: GenWord, rep: FockRep, fam: HopfFamily) -> np.ndarray:
    """Antihomomorphism: letters mapped by S, product order reversed."""
    out = np.eye(rep.dim, dtype=complex) * w.prefactor
    for ltr in reversed(w.letters):
        out = out @ antipode_letter(ltr, rep, fam)
    return out


def opposite_coproduct_op(w: GenWord, rep1: FockRep, rep2: FockRep,
                          fam: HopfFamily, check_params: bool = True) -> np.ndarray:
    """T.Delta: the coproduct conjugated by the tensor swap (needs D1 = D2)."""
    if rep1.dim != rep2.dim:
        raise ParameterError("opposite coproduct needs equal factor dimensions")
    P = tensor_swap(rep1.dim, rep2.dim)
    return P @ coproduct_op(w, rep2, rep1, fam, check_params) @ P


def qbar_coproduct_op(w: GenWord, rep1: FockRep, rep2: FockRep, fam: HopfFamily,
                      kappa_override: int | None = None) -> np.ndarray:
    """Coproduct with DeformParams rebuilt at 1/q, on the same rep matrices.

    gamma negates under the rebuild, so the constant i*alpha/gamma flips
    sign.  The branch integer is held fixed by default; overriding it
    re-chooses the canonical branch of the rebuilt structure (for a
    canonical family the integer enters through K = -2*kappa - 1).
    """
    p = fam.params
    kappa = p.kappa if kappa_override is None else kappa_override
    pbar = DeformParams(q=1.0 / p.q, kappa=kappa, tol=p.tol)
    if fam.is_canonical():
        fam_bar = HopfFamily.canonical(pbar)
    else:
        fam_bar = HopfFamily(m=fam.m, K=fam.K, sign=fam.sign, params=pbar)
    return coproduct_op(w, rep1, rep2, fam_bar, check_params=False)


# ---------------------------------------------------------------------------
# symbolic Sweedler expansion


def _one() -> GenWord:
    return GenWord()


def sweedler_letter(letter, fam: HopfFamily) -> list[tuple[complex, GenWord, GenWord]]:
    """Delta(letter) as an explicit sum of two-leg tensor words."""
    if letter == "N":
        return [(1.0, word("N"), _one()), (1.0, _one(), word("N")),
                (fam.beta_const, _one(), _one())]
    if isinstance(letter, tuple):
        s = letter[1]
        scale = complex(np.exp(s * fam.beta_const * fam.params.gamma))
        return [(scale, word(qpow(s)), word(qpow(s)))]
    if letter == "a":
        ph = fam.phase_lower_gen
        return [(ph, word("a"), word(qpow(fam.m))),
                (ph * fam.sg * 1j, word(qpow(fam.r)), word("a"))]
    ph = fam.phase_raise_gen
    return [(ph, word("adag"), word(qpow(-fam.r))),
            (ph * fam.sg * 1j, word(qpow(-fam.m)), word("adag"))]


def sweedler_expand(w: GenWord, fam: HopfFamily) -> list[tuple[complex, GenWord, GenWord]]:
    """Delta(w) as a sum of tensor products of generator words."""
    terms = [(complex(w.prefactor), _one(), _one())]
    for ltr in w.letters:
        expansion = sweedler_letter(ltr, fam)
        terms = [(c0 * c1, u0 * u1, v0 * v1)
                 for (c0, u0, v0) in terms for (c1, u1, v1) in expansion]
    return terms


def sweedler_expand_n(w: GenWord, fam: HopfFamily, nlegs: int,
                      iterate: str = "left") -> list[tuple[complex, tuple[GenWord, ...]]]:
    """n-leg expansion; 'left' iterates Delta on the first leg as in
    Delta_n = (Delta (x) id^(n-1)) Delta_(n-1), 'right' on the last leg."""
    if nlegs < 1:
        raise ParameterError("need at least one leg")
    terms: list[tuple[complex, tuple[GenWord, ...]]] = [(complex(1.0), (w,))]
    while len(terms[0][1]) < nlegs:
        new_terms = []
        for coeff, legs in terms:
            pos = 0 if iterate == "left" else len(legs) - 1
            for c, u, v in sweedler_expand(legs[pos], fam):
                new_legs = legs[:pos] + (u, v) + legs[pos + 1:]
                new_terms.append((coeff * c, new_legs))
        terms = new_terms
    return terms


def matrixize(terms, reps: tuple[FockRep, ...], fam: HopfFamily) -> np.ndarray:
    total = int(np.prod([r.dim for r in reps]))
    out = np.zeros((total, total), dtype=complex)
    for coeff, legs in terms:
        out += coeff * kron_all(*(rep_word(u, r, fam.params) for u, r in zip(legs, reps)))
    return out


def multileg_coproduct_letter(letter, reps: tuple[FockRep, ...], fam: HopfFamily,
                              iterate: str = "left") -> np.ndarray:
    """Image of one generator under the iterated coproduct, matrixized."""
    return matrixize(sweedler_expand_n(word(letter), fam, len(reps), iterate),
                     reps, fam)


def iterated_coproduct(w: GenWord, reps: tuple[FockRep, ...], fam: HopfFamily,
                       dim_cap: int = 1 << 16, iterate: str = "left") -> np.ndarray:
    """Iterated coproduct Delta_n on n+1 representation factors.

    Delta_n is an algebra homomorphism, so words multiply letterwise;
    only single letters need the explicit Sweedler expansion.
    """
    total = int(np.prod([r.dim for r in reps]))
    if total > dim_cap:
        raise ParameterError(f"tensor dimension {total} exceeds cap {dim_cap}")
    if len(reps) == 1:
        return rep_word(w, reps[0], fam.params)
    out = np.eye(total, dtype=complex) * w.prefactor
    images: dict = {}
    for ltr in w.letters:
        if ltr not in images:
            images[ltr] = multileg_coproduct_letter(ltr, reps, fam, iterate)
        out = out @ images[ltr]
    return out


# ---------------------------------------------------------------------------
# Hopf axiom suite


def default_axiom_words(max_len: int = 3) -> list[GenWord]:
    gens = ["N", "a", "adag"]
    words = []
    from itertools import product
    for n in range(1, max_len + 1):
        for combo in product(gens, repeat=n):
            words.append(word(*combo))
    return words


def check_hopf_axioms(fam: HopfFamily, rep: FockRep,
                      sample: list[GenWord] | None = None,
                      window: Window | None = None,
                      tol: float | None = None) -> list[IdentityReport]:
    """Residuals of the coassociativity, counit and antipode axioms.

    The multiplication map in the antipode axiom acts on the explicit
    Sweedler expansion: X (x) Y summands are mapped to X*Y, which is
    exact bookkeeping because the expansions here are finite.
    """
    if sample is None:
        sample = default_axiom_words()
    tol = tol if tol is not None else fam.params.tol
    D = rep.dim
    reports = []
    fam_tag = {"m": fam.m, "K": fam.K, "sign": fam.sign, "q": str(fam.params.q)}
    trip = (rep, rep, rep)
    letter3 = {side: {ltr: multileg_coproduct_letter(ltr, trip, fam, side)
                      for ltr in ("N", "a", "adag")} for side in ("left", "right")}

    def delta2(w: GenWord, side: str) -> np.ndarray:
        out = np.eye(D ** 3, dtype=complex) * w.prefactor
        for ltr in w.letters:
            img = letter3[side].get(ltr)
            if img is None:
                img = multileg_coproduct_letter(ltr, trip, fam, side)
            out = out @ img
        return out

    for w in sample:
        guard = max(1, len(w.letters))
        win = window or Window(max(0, D - 1 - guard), guard=guard)
        wname = w.name

        raw, nrm = residual(delta2(w, "left"), delta2(w, "right"), (D, D, D), win)
        reports.append(make_report(f"hopf_coassoc_{wname}", fam_tag, [D, D, D],
                                   win.max_index, raw, nrm, tol))

        target = rep_word(w, rep, fam.params)
        expansion = sweedler_expand(w, fam)
        eps_id = sum(c * counit(u, fam) * rep_word(v, rep, fam.params)
                     for c, u, v in expansion)
        id_eps = sum(c * rep_word(u, rep, fam.params) * counit(v, fam)
                     for c, u, v in expansion)
        for tag, got in (("counit_left", eps_id), ("counit_right", id_eps)):
            raw, nrm = residual(got, target, (D,), win)
            reports.append(make_report(f"hopf_{tag}_{wname}", fam_tag, [D],
                                       win.max_index, raw, nrm, tol))

        eps_scalar = counit(w, fam) * np.eye(D, dtype=complex)
        s_id = sum(c * antipode_op(u, rep, fam) @ rep_word(v, rep, fam.params)
                   for c, u, v in expansion)
        id_s = sum(c * rep_word(u, rep, fam.params) @ antipode_op(v, rep, fam)
                   for c, u, v in expansion)
        for tag, got in (("antipode_left", s_id), ("antipode_right", id_s)):
            raw, nrm = residual(got, eps_scalar, (D,), win)
            reports.append(make_report(f"hopf_{tag}_{wname}", fam_tag, [D],
                                       win.max_index, raw, nrm, tol))
    return reports
