"""Command-line surface: configuration, suite orchestration, reporting.

Exit codes: 0 when every non-informational verdict matches its
expectation (expected failures included), 1 on any unexpected verdict,
2 on configuration or runtime errors.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import fockrep, hopfops, rmatrix, sl2bridge, symalg
from .qscalars import DeformParams, q_number, q_power
from .report import IdentityReport, dump_matrix, make_report

DEFAULT_EXPECT_FAIL = (
    "yan_claimed:intertwiner_a",
    "yan_claimed:intertwiner_adag",
    "yan_claimed:yang_baxter",
    "yan_claimed:fusion_*",
    "yan_claimed:yan_relation_*",
    "*:hopf_ideal_witness",
)


class ConfigError(ValueError):
    """Raised on malformed or inconsistent configuration input."""


@dataclass(frozen=True)
class SuiteConfig:
    q: complex = 1.3 + 0.0j
    kappa: int = 0
    tol: float = 1e-9
    seed: int = 20160
    window: int = 4
    dim_pair: int = 12
    dim_triple: int = 8
    tensor_cap: int = 1 << 16
    degree_cap: int = 8
    rep_dims: tuple = (12, 12)
    rep_shifts: tuple = (0.0 + 0.0j, 0.5 + 0.0j)
    family_m: tuple = (-0.5, -0.5, -0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0)
    family_K: tuple = (-1, 0, 1, -1, 0, 1, -1, 0, 1)
    family_signs: tuple = ("lower",) * 9
    rspecs: tuple = ("quantum_double", "yan_claimed", "general:m=0.5,K=-1,sign=lower")
    axiom_dim: int = 6
    axiom_max_word_len: int = 2
    pairing_kmax: int = 3
    pairing_mmax: int = 3
    out_report: str | None = None
    dump_dir: str | None = None
    expect_fail: tuple = DEFAULT_EXPECT_FAIL
    scan_q_values: tuple = ()

    def params(self, q: complex | None = None) -> DeformParams:
        return DeformParams(q=self.q if q is None else q, kappa=self.kappa, tol=self.tol)

    def echo(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            if isinstance(value, complex):
                out[key] = str(value)
            elif isinstance(value, tuple):
                out[key] = [str(v) if isinstance(v, complex) else v for v in value]
            else:
                out[key] = value
        if self.params().on_unit_circle:
            out["unit_modulus_q"] = True
        return out


# ---------------------------------------------------------------------------
# configuration grammar: '#' comments, 'key = value' lines with dotted
# sections; values are numbers (int/float/complex, 'i' or 'j' imaginary
# suffix), quoted or bare strings, or flat '[v, v, ...]' lists.

_KNOWN_KEYS = {
    "q": ("q", "complex"),
    "kappa": ("kappa", "int"),
    "tol": ("tol", "float"),
    "seed": ("seed", "int"),
    "window": ("window", "int"),
    "dims.pair": ("dim_pair", "int"),
    "dims.triple": ("dim_triple", "int"),
    "caps.tensor": ("tensor_cap", "int"),
    "caps.degree": ("degree_cap", "int"),
    "reps.dims": ("rep_dims", "list_int"),
    "reps.shifts": ("rep_shifts", "list_complex"),
    "families.m": ("family_m", "list_float"),
    "families.k": ("family_K", "list_int"),
    "families.signs": ("family_signs", "list_str"),
    "rspecs": ("rspecs", "list_str"),
    "axioms.dim": ("axiom_dim", "int"),
    "axioms.max_word_len": ("axiom_max_word_len", "int"),
    "pairing.kmax": ("pairing_kmax", "int"),
    "pairing.mmax": ("pairing_mmax", "int"),
    "out.report": ("out_report", "str"),
    "out.dump_dir": ("dump_dir", "str"),
    "expect_fail": ("expect_fail", "list_str"),
    "scan.q_values": ("scan_q_values", "list_complex"),
}


def _parse_scalar(text: str, lineno: int):
    text = text.strip()
    if not text:
        raise ConfigError(f"line {lineno}: empty value")
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        return text  # bare string


def _split_list(inner: str, lineno: int) -> list[str]:
    """Split a list body on commas, honoring double-quoted elements."""
    parts, buf, quoted = [], [], False
    for ch in inner:
        if ch == '"':
            quoted = not quoted
            buf.append(ch)
        elif ch == "," and not quoted:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
    if quoted:
        raise ConfigError(f"line {lineno}: unterminated quote in list")
    parts.append("".join(buf))
    return parts


def _parse_value(text: str, lineno: int):
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ConfigError(f"line {lineno}: unterminated list")
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_parse_scalar(part, lineno) for part in _split_list(inner, lineno)]
    return _parse_scalar(text, lineno)


def _coerce(value, kind: str, key: str, lineno: int):
    def scalar(v, k):
        try:
            if k == "int":
                if isinstance(v, float) and v != int(v):
                    raise ValueError
                return int(v)
            if k == "float":
                return float(v)
            if k == "complex":
                return complex(v.replace("i", "j")) if isinstance(v, str) else complex(v)
            if k == "str":
                return str(v)
        except (ValueError, TypeError):
            pass
        raise ConfigError(f"line {lineno}: value for {key!r} is not a valid {k}")

    if kind.startswith("list_"):
        if not isinstance(value, list):
            raise ConfigError(f"line {lineno}: {key!r} expects a list")
        return tuple(scalar(v, kind[5:]) for v in value)
    if isinstance(value, list):
        raise ConfigError(f"line {lineno}: {key!r} does not take a list")
    return scalar(value, kind)


def parse_config(path: str | Path) -> SuiteConfig:
    """Parse the key-value configuration grammar, rejecting unknown keys."""
    text = Path(path).read_text(encoding="utf-8")
    seen: dict = {}
    got_q = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        attr, kind = _KNOWN_KEYS[key]
        seen[attr] = _coerce(_parse_value(raw, lineno), kind, key, lineno)
        if key == "q":
            got_q = True
    if not got_q:
        raise ConfigError("configuration must set q")
    config = SuiteConfig(**seen)
    _validate_config(config)
    return config


def _validate_config(config: SuiteConfig) -> None:
    if len(config.rep_dims) != len(config.rep_shifts) or not config.rep_dims:
        raise ConfigError("reps.dims and reps.shifts must be equal-length, non-empty")
    if not (len(config.family_m) == len(config.family_K) == len(config.family_signs)):
        raise ConfigError("family grid lists must have equal length")
    for sign in config.family_signs:
        if sign not in ("upper", "lower"):
            raise ConfigError(f"unknown family sign {sign!r}")
    for spec in config.rspecs:
        parse_rspec(spec)
    for d in (*config.rep_dims, config.dim_pair, config.axiom_dim):
        if d < 2:
            raise ConfigError("all representation dimensions must be >= 2")
    if config.dim_pair ** 2 > config.tensor_cap or config.dim_triple ** 3 > config.tensor_cap:
        raise ConfigError("configured dimensions exceed the tensor cap")
    if config.window + 1 > config.dim_pair - 1:
        raise ConfigError("window does not fit into the pairwise dimension")


def parse_rspec(text: str) -> rmatrix.RSpec:
    """'quantum_double' | 'yan_claimed' | 'general:m=..,K=..,sign=..'."""
    text = text.strip()
    if text in ("quantum_double", "yan_claimed"):
        return rmatrix.RSpec(kind=text)
    if text.startswith("general:"):
        fields = {}
        for part in text[len("general:"):].split(","):
            key, _, val = part.partition("=")
            fields[key.strip()] = val.strip()
        try:
            return rmatrix.RSpec(kind="general_family", m=float(fields["m"]),
                                 K=int(fields["K"]), sign=fields["sign"])
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"malformed general rspec {text!r}: {exc}") from None
    raise ConfigError(f"unknown rspec {text!r}")


# ---------------------------------------------------------------------------
# suite


def _qscalars_cases(config: SuiteConfig, p: DeformParams):
    rng = np.random.default_rng(config.seed)

    def additivity():
        started = time.perf_counter()
        dev = 0.0
        for _ in range(20):
            z1, z2 = (complex(*rng.uniform(-2, 2, 2)) for _ in range(2))
            dev = max(dev, abs(q_power(z1 + z2, p) - q_power(z1, p) * q_power(z2, p)))
        return make_report("qscalars_qpower_additivity", {"q": str(p.q)}, [20], 0,
                           dev, dev, p.tol, started)

    def inversion():
        started = time.perf_counter()
        pinv = p.inverted()
        dev = 0.0
        for _ in range(20):
            x = complex(*rng.uniform(-3, 3, 2))
            dev = max(dev, abs(q_number(x, p) - q_number(x, pinv)))
        return make_report("qscalars_qnum_inversion", {"q": str(p.q)}, [20], 0,
                           dev, dev, p.tol, started)

    def recursion():
        from .qscalars import half_index_product
        started = time.perf_counter()
        dev = 0.0
        for k in range(1, 13):
            dev = max(dev, abs(half_index_product(k, p)
                               - half_index_product(k - 1, p) * q_number(k / 2.0, p)))
        return make_report("qscalars_half_index_recursion", {"q": str(p.q)}, [12], 0,
                           dev, dev, p.tol, started)

    return [("qscalars_qpower_additivity", additivity),
            ("qscalars_qnum_inversion", inversion),
            ("qscalars_half_index_recursion", recursion)]


def _fockrep_cases(config: SuiteConfig, p: DeformParams):
    cases = []
    for D, c in zip(config.rep_dims, config.rep_shifts):
        rels = ("R2", "R3", "R4", "R5") if c == 0 else ("R1", "Ry")
        win = fockrep.Window(min(8, D - 2), guard=1)
        for rel in rels:
            def run(D=D, c=c, rel=rel, win=win):
                started = time.perf_counter()
                rep = fockrep.build_rep(D, c, p)
                nrm = fockrep.check_relation(rep, rel, win)
                return make_report(f"relation_{rel}", {"q": str(p.q), "c": str(c)},
                                   [D], win.max_index, nrm, nrm, p.tol, started)
            cases.append((f"relation_{rel}_c{c}", run))

    def casimir_case():
        started = time.perf_counter()
        dev = 0.0
        D = config.dim_pair
        win = fockrep.Window(min(8, D - 2), guard=1)
        for c in (0.5, 1.0, 0.3, 2.0 + 0.5j, -0.7):
            rep = fockrep.build_rep(D, c, p)
            want = -q_number(complex(c) - 0.5, p) * np.eye(D, dtype=complex)
            raw, nrm = fockrep.residual(fockrep.casimir(rep), want, (D,), win)
            dev = max(dev, nrm)
        return make_report("casimir_scalar", {"q": str(p.q)}, [D], win.max_index,
                           dev, dev, p.tol, started)

    def classical_case():
        started = time.perf_counter()
        nrm = fockrep.classical_limit_residual(8, 1e-6, kappa=config.kappa)
        return make_report("classical_limit", {"eps": 1e-6}, [8], 6,
                           nrm, nrm, 1e-5, started)

    cases.append(("casimir_scalar", casimir_case))
    cases.append(("classical_limit", classical_case))
    return cases


def _hopfops_cases(config: SuiteConfig, p: DeformParams):
    cases = []
    D = config.axiom_dim
    words = hopfops.default_axiom_words(config.axiom_max_word_len)
    fams = [hopfops.HopfFamily.canonical(p)]
    fams += [hopfops.HopfFamily(m=m, K=K, sign=s, params=p)
             for m, K, s in zip(config.family_m, config.family_K, config.family_signs)]
    for fam in fams:
        def run(fam=fam):
            rep = fockrep.build_rep(D, 0.5, p)
            return hopfops.check_hopf_axioms(fam, rep, words, tol=p.tol)
        cases.append((f"axioms_m{fam.m}_K{fam.K}_{fam.sign}", run))

    def homomorphism_random():
        started = time.perf_counter()
        rng = np.random.default_rng(config.seed + 1)
        rep = fockrep.build_rep(D, 0.5, p)
        fam = hopfops.HopfFamily.canonical(p)
        gens = ["N", "a", "adag"]
        dev = 0.0
        win = fockrep.Window(D - 1 - 4, guard=4)
        for _ in range(6):
            u = hopfops.word(*rng.choice(gens, size=2))
            v = hopfops.word(*rng.choice(gens, size=2))
            duv = hopfops.coproduct_op(u * v, rep, rep, fam)
            du_dv = hopfops.coproduct_op(u, rep, rep, fam) @ hopfops.coproduct_op(v, rep, rep, fam)
            _, nrm = fockrep.residual(duv, du_dv, (D, D), win)
            dev = max(dev, nrm)
        return make_report("hopf_homomorphism_random", {"q": str(p.q)}, [D, D],
                           win.max_index, dev, dev, p.tol, started)

    cases.append(("hopf_homomorphism_random", homomorphism_random))
    return cases


def _symalg_cases(config: SuiteConfig, p: DeformParams):
    cap = config.degree_cap

    def pairing():
        return symalg.pairing_check(config.pairing_kmax, config.pairing_mmax, p, cap)

    def bracket():
        return symalg.dual_bracket_check(p, cap=cap)

    def dual_hopf():
        return symalg.dual_hopf_check(p, deg=2, cap=cap)

    def cross():
        started = time.perf_counter()
        dev = 0.0
        # nu * A = A nu + A ; nu * Np = Np nu ; beta * Np = Np beta + beta
        akey, nkey, unit = (1, 0, 2), (0, 1, 0), (0, 0, 0)
        dw_nu, dw_eps, dw_beta = (0, 1, 0), (0, 0, 0), (0, 0, 1)
        for fname, xname, expected in (
                ("nu", "araise", {(akey, dw_nu): 1.0, (akey, dw_eps): 1.0}),
                ("nu", "nprime", {(nkey, dw_nu): 1.0}),
                ("beta", "nprime", {(nkey, dw_beta): 1.0, (unit, dw_beta): 1.0})):
            got = symalg.straighten_cross(fname, xname, p, cap)
            dev = max(dev, symalg.cross_terms_difference(got, expected, p, grid=2, cap=cap))
        return make_report("cross_straighten", {"q": str(p.q)}, [2], 2,
                           dev, dev, p.tol, started)

    def quotient():
        rep = fockrep.build_rep(config.dim_pair, 0.5, p)
        return symalg.quotient_cross_check(rep)

    return [("pairing_eqn", pairing), ("dual_bracket", bracket),
            ("dual_hopf", dual_hopf), ("cross_straighten", cross),
            ("quotient_cross", quotient)]


def _rmatrix_cases(config: SuiteConfig, p: DeformParams):
    cases = []
    Dp, Dt = config.dim_pair, config.dim_triple
    rep_pair = fockrep.build_rep(Dp, 0.5, p)
    rep_triple = fockrep.build_rep(Dt, 0.5, p)
    win_pair = fockrep.Window(config.window, guard=1)
    for spec_text in config.rspecs:
        spec = parse_rspec(spec_text)
        fam = rmatrix.family_for(spec, p)
        is_yan = spec.kind == "yan_claimed"
        for gen in ("N", "a", "adag"):
            cases.append((f"{spec.label()}:intertwiner_{gen}",
                          lambda spec=spec, fam=fam, gen=gen: rmatrix.check_intertwiner(
                              spec, fam, rep_pair, rep_pair, gen, win_pair)))
        cases.append((f"{spec.label()}:yang_baxter",
                      lambda spec=spec: rmatrix.check_yang_baxter(
                          spec, rep_triple, rep_triple, rep_triple,
                          dim_cap=config.tensor_cap)))
        cases.append((f"{spec.label()}:fusion",
                      lambda spec=spec, fam=fam: rmatrix.check_fusion(
                          spec, fam, rep_triple, rep_triple, rep_triple)))
        cases.append((f"{spec.label()}:antipode_inverse",
                      lambda spec=spec, fam=fam, ov=("info" if is_yan else None):
                      rmatrix.check_antipode_inverse(spec, fam, rep_pair, rep_pair,
                                                     win_pair, verdict_override=ov)))
        cases.append((f"{spec.label()}:counit",
                      lambda spec=spec, fam=fam, ov=("info" if is_yan else None):
                      rmatrix.check_counit(spec, fam, rep_pair, rep_pair,
                                           verdict_override=ov)))
        for gen in ("N", "a"):
            ov = None if is_yan else "info"  # the relation is asserted only for the
            cases.append((f"{spec.label()}:yan_relation_{gen}",  # published candidate
                          lambda spec=spec, fam=fam, gen=gen, ov=ov:
                          rmatrix.check_yan_relation(spec, fam, rep_pair, rep_pair,
                                                     gen, win_pair, verdict_override=ov)))
    return cases


def _sl2_cases(config: SuiteConfig, p: DeformParams):
    Dp = config.dim_pair

    def relations():
        rep = fockrep.build_rep(Dp, 0.5, p)
        return sl2bridge.check_sl2(sl2bridge.realize_sl2(rep, 1.0))

    def centrality():
        started = time.perf_counter()
        dev = 0.0
        for c in (0.5, 1.0):
            dev = max(dev, sl2bridge.casimir_centrality(fockrep.build_rep(Dp, c, p)))
        return make_report("sl2_casimir_central", {"q": str(p.q)}, [Dp], Dp - 2,
                           dev, dev, p.tol, started)

    def witness():
        fam = hopfops.HopfFamily.canonical(p)
        return sl2bridge.hopf_ideal_witness(config.dim_triple, fam)

    def witness_consistency():
        started = time.perf_counter()
        fam = hopfops.HopfFamily.canonical(p)
        dev = max(sl2bridge.witness_projection_residual(config.dim_triple, p),
                  sl2bridge.witness_counit_leg_residual(config.dim_triple, fam))
        return make_report("witness_consistency", {"q": str(p.q)}, [config.dim_triple],
                           config.dim_triple - 2, dev, dev, p.tol, started)

    def inverse_round_trip():
        started = time.perf_counter()
        rep = fockrep.build_rep(Dp, 0.5, p)
        triple = sl2bridge.realize_sl2(rep, 1.0)
        matN, matA, matAdag, target = sl2bridge.inverse_realization(triple, 1.0)
        nrm = sl2bridge.symmetrized_relation_residual(matN, matA, matAdag, target)
        # published shift constant: a nonzero residual is surfaced, not corrected
        return make_report("inverse_realization_y", {"q": str(p.q), "shift": "published"},
                           [Dp], Dp - 2, nrm, nrm, p.tol, started,
                           verdict="info" if nrm > p.tol else "pass")

    return [("sl2_relations", relations), ("sl2_casimir_central", centrality),
            ("hopf_ideal_witness", witness), ("witness_consistency", witness_consistency),
            ("inverse_realization_y", inverse_round_trip)]


def _expected_for(report: IdentityReport, patterns) -> str:
    key = f"{report.params.get('rspec', '-')}:{report.identity}"
    for pattern in patterns:
        if fnmatch.fnmatch(key, pattern) or fnmatch.fnmatch(report.identity, pattern):
            return "fail"
    return "pass"


def run_suite(config: SuiteConfig) -> list[IdentityReport]:
    """Execute all sections in order; case errors become info entries."""
    p = config.params()
    cases = []
    cases += _qscalars_cases(config, p)
    cases += _fockrep_cases(config, p)
    cases += _hopfops_cases(config, p)
    cases += _symalg_cases(config, p)
    cases += _rmatrix_cases(config, p)
    cases += _sl2_cases(config, p)

    def run_one(item):
        case_id, fn = item
        try:
            result = fn()
        except Exception as exc:  # capture, do not abort the suite
            return [IdentityReport(identity=case_id.split(":")[-1],
                                   params={"case": case_id}, dims=[], window=0,
                                   raw_residual=float("nan"),
                                   normalized_residual=float("nan"),
                                   verdict="info", error=f"{type(exc).__name__}: {exc}")]
        return result if isinstance(result, list) else [result]

    workers = int(os.environ.get("QBOSON_WORKERS", "0") or "0")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run_one, cases))
    else:
        chunks = [run_one(case) for case in cases]
    reports = [rep for chunk in chunks for rep in chunk]
    for rep in reports:
        if rep.verdict != "info":
            rep.expected = _expected_for(rep, config.expect_fail)
    return reports


def exit_code_for(reports: list[IdentityReport]) -> int:
    for rep in reports:
        if rep.verdict == "info":
            continue
        if rep.expected is not None and rep.verdict != rep.expected:
            return 1
    return 0


def emit_report(reports: list[IdentityReport], path: str | Path | None,
                config_echo: dict | None = None, include_timing: bool = True) -> str:
    doc = {"config": config_echo or {},
           "results": [r.as_dict(include_timing=include_timing) for r in reports]}
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is not None:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")
    return text


# ---------------------------------------------------------------------------
# entry points


def _load_config(args) -> SuiteConfig:
    config = parse_config(args.config) if args.config else SuiteConfig()
    overrides = {}
    if getattr(args, "q", None) is not None:
        overrides["q"] = complex(args.q.replace("i", "j"))
    if getattr(args, "kappa", None) is not None:
        overrides["kappa"] = args.kappa
    if getattr(args, "dim", None) is not None:
        overrides["dim_pair"] = args.dim
        overrides["rep_dims"] = (args.dim,) * len(config.rep_shifts)
    if getattr(args, "window", None) is not None:
        overrides["window"] = args.window
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "out", None) is not None:
        overrides["out_report"] = args.out
    if getattr(args, "dump_dir", None) is not None:
        overrides["dump_dir"] = args.dump_dir
    config = replace(config, **overrides)
    _validate_config(config)
    return config


def _cmd_verify(args) -> int:
    config = _load_config(args)
    reports = run_suite(config)
    text = emit_report(reports, config.out_report, config.echo())
    if config.out_report is None:
        sys.stdout.write(text)
    else:
        counts = {}
        for rep in reports:
            counts[rep.verdict] = counts.get(rep.verdict, 0) + 1
        print(f"wrote {config.out_report}: " +
              ", ".join(f"{v} {k}" for k, v in sorted(counts.items())))
    return exit_code_for(reports)


def _cmd_rmatrix(args) -> int:
    config = _load_config(args)
    p = config.params()
    spec = parse_rspec(args.rspec)
    rep = fockrep.build_rep(config.dim_pair, 0.5, p)
    R = rmatrix.build_r(spec, rep, rep)
    out_dir = Path(config.dump_dir or ".")
    path = dump_matrix(R, out_dir / f"rmatrix_{spec.kind}.mtx")
    print(f"wrote {path} ({R.shape[0]}x{R.shape[1]})")
    return 0


def _cmd_pairing(args) -> int:
    config = _load_config(args)
    p = config.params()
    G = symalg.pairing_gram(args.kmax, args.mmax, p, config.degree_cap)
    report = symalg.pairing_check(args.kmax, args.mmax, p, config.degree_cap)
    if config.dump_dir:
        path = dump_matrix(G, Path(config.dump_dir) / "pairing_gram.mtx")
        print(f"wrote {path}")
    print(f"pairing max deviation: {report.raw_residual:.3e} [{report.verdict}]")
    return 0 if report.verdict == "pass" else 1


def _cmd_scan(args) -> int:
    config = _load_config(args)
    q_values = [complex(s.replace("i", "j")) for s in args.q_list.split(",")] \
        if args.q_list else list(config.scan_q_values)
    if not q_values:
        print("scan: no q values given (use --q-list or scan.q_values)", file=sys.stderr)
        return 2
    worst = 0
    for idx, q in enumerate(q_values):
        sub = replace(config, q=q)
        reports = run_suite(sub)
        out = None
        if config.out_report:
            stem = Path(config.out_report)
            out = stem.with_name(f"{stem.stem}_{idx}{stem.suffix or '.json'}")
        text = emit_report(reports, out, sub.echo())
        if out is None:
            sys.stdout.write(text)
        else:
            print(f"q={q}: wrote {out}")
        worst = max(worst, exit_code_for(reports))
    return worst


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qboson",
        description="verification suites for the deformed boson Hopf algebra "
                    "and its quantum-double R-matrix")
    parser.add_argument("--config", metavar="PATH", help="configuration file")
    parser.add_argument("--q", help="deformation parameter, e.g. 1.3 or 0.7+0.2i")
    parser.add_argument("--kappa", type=int, help="branch integer")
    parser.add_argument("--dim", type=int, help="pairwise truncation dimension")
    parser.add_argument("--window", type=int, help="leak-free window size")
    parser.add_argument("--seed", type=int, help="seed for sampled checks")
    parser.add_argument("--out", metavar="PATH", help="report output path")
    parser.add_argument("--dump-dir", metavar="PATH", help="matrix dump directory")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", help="run the full verification suite")
    sp = sub.add_parser("rmatrix", help="build one R-matrix and dump it")
    sp.add_argument("--rspec", default="quantum_double")
    sp = sub.add_parser("pairing", help="dual-pairing Gram table")
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--mmax", type=int, default=3)
    sp = sub.add_parser("scan", help="sweep q over a list, one report per point")
    sp.add_argument("--q-list", help="comma-separated q values")
    args = parser.parse_args(argv)
    handlers = {"verify": _cmd_verify, "rmatrix": _cmd_rmatrix,
                "pairing": _cmd_pairing, "scan": _cmd_scan}
    try:
        return handlers[args.command](args)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime error contract
        print(f"runtime error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
