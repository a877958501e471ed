"""
Оркестратор проверок: разбор встроенных и файловых симметрий, набор проверок
по степеням (в том числе в нескольких процессах) и детерминированные
JSON-отчеты.
"""

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from app.config import HECKE_SUITE_NMAX, REPORT_DIR
from app.scalars import FieldSpec, format_scalar
from app.symcomb import (
    compositions, dist_reps, format_composition, format_perm, parse_composition, trivial_intersection_reps,
    young_generators,
)
from app.hecke import (
    RELATION_KINDS, alt_hom_dim, alternating_rep, explicit_eigenbases, find_isomorphism, free_factor_hom_dim,
    hom_dim_formula, hom_space, homotopy_check, inclusion_check, induced_module, is_alternating,
    mackey_restrict, module_exactness, one_dim_reps, preimage_check, rep_from_letters, tilde_rep,
    transpose_module, trivial_rep, twisted_module, zero_hecke_decomposition, zero_hecke_gr_action,
)
from app.quadratic import (
    component_dims, hilbert_convolution, hilbert_duality_check, koszul_complex_homology, left_kernel_check,
    upsilon,
)
from app.heckesym import (
    BUILTIN_NAMES, HeckeSymmetry, SymmetryFileError, algebra_by_name, builtin_symmetry, calT_check,
    calT_exactness, cotensor_dim_check, ext_relations, gorenstein_report, hom_identification_check,
    dual_hom_check, calT_annihilator_check, restriction_tensor_check, sym_relations, symmetry_from_document,
    symmetry_to_document, tensor_annihilator_check, tensor_representation, tilde_identity_check, top_frobenius,
    transforms_check,
)

logger = logging.getLogger(__name__)


class ConfigError(ValueError):
    """Некорректная конфигурация запуска"""


CHECK_NAMES = (
    "relations", "koszul", "hilbert-duality", "frobenius", "homotopy", "hom-identification",
    "cotensor", "lemma41", "hecke-suite", "transforms", "tensor-exactness", "calT-annihilator", "restriction",
)
# проверки, строящие комплексы по степеням n >= 2
COMPLEX_CHECKS = ("koszul", "homotopy", "lemma41", "tensor-exactness", "calT-annihilator", "restriction")
STATUS_ORDER = ("pass", "hypothesis-not-met", "fail", "error")
FAILING = ("fail", "error")


@dataclass(frozen=True)
class CheckConfig:
    symmetries: Tuple[str, ...]
    field: FieldSpec
    nmax: int
    checks: Tuple[str, ...]
    out: Optional[str] = None
    jobs: int = 1
    suite_nmax: int = HECKE_SUITE_NMAX

    def validate(self) -> None:
        unknown = [c for c in self.checks if c not in CHECK_NAMES]
        if unknown:
            raise ConfigError(f"Unknown checks {unknown}; available: {', '.join(CHECK_NAMES)}")
        if len(self.symmetries) > 3:
            raise ConfigError(f"At most three symmetries are supported, got {len(self.symmetries)}")
        if self.nmax < 0:
            raise ConfigError(f"Degree bound must be non-negative, got {self.nmax}")
        complex_checks = [c for c in self.checks if c in COMPLEX_CHECKS]
        if complex_checks and self.nmax < 2:
            raise ConfigError(f"Checks {complex_checks} need nmax >= 2, got {self.nmax}")
        needs_symmetry = [c for c in self.checks if c != "hecke-suite"]
        if needs_symmetry and not self.symmetries:
            raise ConfigError(f"Checks {needs_symmetry} need at least one --symmetry")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be positive, got {self.jobs}")
        if self.suite_nmax < 1:
            raise ConfigError(f"Suite degree bound must be positive, got {self.suite_nmax}")

    def describe(self) -> dict:
        """Эхо конфигурации для отчета (без jobs и out: отчет от них не зависит)"""
        return {
            "symmetries": list(self.symmetries),
            "field": self.field.describe(),
            "nmax": self.nmax,
            "checks": list(self.checks),
            "suite_nmax": self.suite_nmax,
        }


@dataclass
class CheckReport:
    config: dict
    results: Dict[str, dict] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def failed(self) -> List[str]:
        return [name for name, entry in self.results.items() if entry["status"] in FAILING]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def canonical(self) -> dict:
        return {"config": self.config, "results": self.results}

    def to_document(self, include_timing: bool = True) -> dict:
        doc = self.canonical()
        if include_timing:
            doc["timing"] = self.timing
        return doc


# --- Симметрии ---

def load_symmetry(path: str) -> HeckeSymmetry:
    """Чтение файла симметрии и проверка соотношений"""
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise SymmetryFileError(f"Cannot read symmetry file: {e}", path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SymmetryFileError(f"Invalid JSON ({e.msg}) at column {e.colno}", f"{path}:{e.lineno}")
    try:
        sym = symmetry_from_document(doc)
    except SymmetryFileError as e:
        raise SymmetryFileError(str(e), path)
    logger.info(f"Loaded symmetry {sym.label or path} (d={sym.d}) from {path}")
    return sym


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def save_symmetry(sym: HeckeSymmetry, path: str) -> None:
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_json(symmetry_to_document(sym)))
    logger.info(f"Saved symmetry {sym.label} to {path}")


def parse_builtin(spec_text: str, field_spec: FieldSpec) -> HeckeSymmetry:
    """name[:p1,p2] для встроенных симметрий или путь к .json"""
    text = spec_text.strip()
    if text.endswith(".json") or os.path.sep in text:
        return load_symmetry(text)
    name, _, raw = text.partition(":")
    if name not in BUILTIN_NAMES:
        raise ConfigError(f"Unknown symmetry {name!r}; expected one of {', '.join(BUILTIN_NAMES)} or a .json path")
    params = [p.strip() for p in raw.split(",") if p.strip()]
    try:
        return builtin_symmetry(name, params, field_spec)
    except ValueError as e:
        raise ConfigError(f"Cannot build {text!r}: {e}")


@lru_cache(maxsize=8)
def resolve_symmetries(cfg: CheckConfig) -> Tuple[HeckeSymmetry, ...]:
    return tuple(parse_builtin(spec, cfg.field) for spec in cfg.symmetries)


def _roles(cfg: CheckConfig) -> Tuple[HeckeSymmetry, HeckeSymmetry, HeckeSymmetry]:
    """(R, R', R''): --symmetry, --symmetry2 (по умолчанию R), --symmetry3 (по умолчанию R')"""
    syms = resolve_symmetries(cfg)
    sym = syms[0]
    sym_prime = syms[1] if len(syms) > 1 else sym
    sym_second = syms[2] if len(syms) > 2 else sym_prime
    return sym, sym_prime, sym_second


def _has_pair(cfg: CheckConfig) -> bool:
    return len(cfg.symmetries) > 1


@lru_cache(maxsize=32)
def _algebra(cfg: CheckConfig, name: str):
    sym, sym_prime, _ = _roles(cfg)
    return algebra_by_name(name, sym, sym_prime)


def _algebra_names(cfg: CheckConfig) -> List[str]:
    return ["S", "L"] + (["A", "E"] if _has_pair(cfg) else [])


def _passed(ok: bool) -> str:
    return "pass" if ok else "fail"


def _worst(a: str, b: str) -> str:
    return a if STATUS_ORDER.index(a) >= STATUS_ORDER.index(b) else b


def _degrees(cfg: CheckConfig, start: int = 2) -> range:
    return range(start, cfg.nmax + 1)


# --- Проверки: разбиение на единицы работы и их выполнение ---

def _relations_units(cfg):
    return [str(k) for k in range(len(cfg.symmetries))]


def _relations_run(cfg, key):
    sym = resolve_symmetries(cfg)[int(key)]
    return {
        "status": "pass",
        "symmetry": sym.describe(),
        "sym_relations": sym_relations(sym).relations.dim,
        "ext_relations": ext_relations(sym).relations.dim,
    }


def _koszul_units(cfg):
    return [f"{name}:{n}" for name in _algebra_names(cfg) for n in _degrees(cfg)]


def _koszul_run(cfg, key):
    name, n = key.split(":")
    homology = koszul_complex_homology(_algebra(cfg, name), int(n))
    return {"status": _passed(not any(homology)), "homology": homology}


def _hilbert_units(cfg):
    return ["S/L"] + (["A/E"] if _has_pair(cfg) else [])


def _hilbert_run(cfg, key):
    first, second = key.split("/")
    a_alg, b_alg = _algebra(cfg, first), _algebra(cfg, second)
    a_dims, b_dims = component_dims(a_alg, cfg.nmax), component_dims(b_alg, cfg.nmax)
    dual_dims = [upsilon(a_alg, n).dim for n in range(cfg.nmax + 1)]
    ok, failing = hilbert_duality_check(a_dims, b_dims, cfg.nmax)
    return {
        "status": _passed(ok),
        "dims": {first: a_dims, second: b_dims},
        "dual_dims": dual_dims,
        "convolution": hilbert_convolution(a_dims, b_dims, cfg.nmax),
        "first_failing_degree": failing,
    }


def _frobenius_units(cfg):
    return ["L"] + (["E", "gorenstein"] if _has_pair(cfg) else [])


def _frobenius_run(cfg, key):
    if key == "gorenstein":
        sym, sym_prime, _ = _roles(cfg)
        details = gorenstein_report(sym_prime, sym, cfg.nmax)
        status = "pass"
        for part in ("E", "E_back"):
            status = _worst(status, details[part]["status"])
        return {"status": status, **details}
    algebra = _algebra(cfg, key)
    report = top_frobenius(algebra, cfg.nmax)
    if report is None:
        return {"status": "hypothesis-not-met", "dims": component_dims(algebra, cfg.nmax + 1)}
    result = report.to_dict()
    if report.hypothesis:
        kernels = left_kernel_check(algebra, report.n)
        result["left_kernels"] = {str(k): list(v) for k, v in sorted(kernels.items())}
        if any(a != b for a, b in kernels.values()):
            result["status"] = "fail"
    return result


def _homotopy_units(cfg):
    return [f"{n}:{kind}" for n in _degrees(cfg) for kind in RELATION_KINDS]


def _homotopy_run(cfg, key):
    n, kind = key.split(":")
    sym, _, _ = _roles(cfg)
    report = homotopy_check(tensor_representation(sym, int(n)), kind)
    return {"status": _passed(report.ok), "dims": report.dims, "holds": report.holds}


def _hom_identification_units(cfg):
    return [str(n) for n in _degrees(cfg, 0)]


def _hom_identification_run(cfg, key):
    sym, sym_prime, _ = _roles(cfg)
    report = hom_identification_check(sym_prime, sym, int(key))
    return {"status": _passed(report.ok), **report.to_dict()}


def _cotensor_units(cfg):
    return [str(n) for n in _degrees(cfg, 0)]


def _cotensor_run(cfg, key):
    sym, sym_prime, sym_second = _roles(cfg)
    report = cotensor_dim_check(sym_prime, sym, sym_second, int(key))
    # неравенство означает, что условие о прямых слагаемых не выполнено
    return {"status": "pass" if report.ok else "hypothesis-not-met", **report.to_dict()}


def _annihilator_units(cfg):
    return [f"{name}:{n}" for name in ("S", "L") for n in _degrees(cfg)]


def _annihilator_run(cfg, key):
    name, n = key.split(":")
    sym, _, _ = _roles(cfg)
    inclusions = tensor_annihilator_check(sym, int(n), name)
    return {"status": _passed(all(inclusions.values())), "inclusions": {str(k): v for k, v in inclusions.items()}}


def _calT_annihilator_units(cfg):
    return [f"{name}:{n}" for name in ("A", "E") for n in _degrees(cfg)]


def _calT_annihilator_run(cfg, key):
    name, n = key.split(":")
    sym, sym_prime, _ = _roles(cfg)
    inclusions = calT_annihilator_check(sym_prime, sym, int(n), name)
    return {"status": _passed(all(inclusions.values())), "inclusions": {str(k): v for k, v in inclusions.items()}}


def _transforms_units(cfg):
    return [str(k) for k in range(len(cfg.symmetries))] + (["pair"] if _has_pair(cfg) else [])


def _transforms_run(cfg, key):
    if key != "pair":
        identities = transforms_check(resolve_symmetries(cfg)[int(key)], cfg.nmax)
        return {"status": _passed(all(identities.values())), "identities": identities}
    sym, sym_prime, _ = _roles(cfg)
    identities = dict(dual_hom_check(sym_prime, sym))
    if sym.q != -1:
        identities.update(tilde_identity_check(sym_prime, sym))
    for n in range(2, min(cfg.nmax, 3) + 1):
        for name, ok in calT_check(sym_prime, sym, n).items():
            identities[f"calT_{name}_{n}"] = ok
    return {"status": _passed(all(identities.values())), "identities": identities}


def _tensor_exactness_units(cfg):
    return [f"{kind}:{n}" for kind in ("image", "kernel") for n in _degrees(cfg)]


def _tensor_exactness_run(cfg, key):
    kind, n = key.split(":")
    sym, sym_prime, _ = _roles(cfg)
    homology = calT_exactness(sym_prime, sym, int(n), kind)
    return {"status": _passed(not any(homology)), "homology": homology}


def _restriction_units(cfg):
    return [f"{n}:{m}" for n in _degrees(cfg) for m in range(1, n)]


def _restriction_run(cfg, key):
    n, m = key.split(":")
    sym, sym_prime, sym_second = _roles(cfg)
    report = restriction_tensor_check(sym_prime, sym, sym_second, int(n), int(m))
    return {"status": "pass" if report.ok else "hypothesis-not-met", **report.to_dict()}


def _hecke_suite_units(cfg):
    return [str(n) for n in range(1, cfg.suite_nmax + 1)]


def _hecke_suite_run(cfg, key):
    return hecke_battery(int(key), cfg.field)


CHECKS: Dict[str, Tuple[Callable, Callable]] = {
    "relations": (_relations_units, _relations_run),
    "koszul": (_koszul_units, _koszul_run),
    "hilbert-duality": (_hilbert_units, _hilbert_run),
    "frobenius": (_frobenius_units, _frobenius_run),
    "homotopy": (_homotopy_units, _homotopy_run),
    "hom-identification": (_hom_identification_units, _hom_identification_run),
    "cotensor": (_cotensor_units, _cotensor_run),
    "lemma41": (_annihilator_units, _annihilator_run),
    "hecke-suite": (_hecke_suite_units, _hecke_suite_run),
    "transforms": (_transforms_units, _transforms_run),
    "tensor-exactness": (_tensor_exactness_units, _tensor_exactness_run),
    "calT-annihilator": (_calT_annihilator_units, _calT_annihilator_run),
    "restriction": (_restriction_units, _restriction_run),
}


# --- Батарея для модулей Гекке ---

# поиск изоморфизма решает систему на dim² неизвестных; большие пары пропускаются
ISOMORPHISM_DIM_LIMIT = 96


def _mackey_blocks_ok(m, mu, blocks) -> bool:
    """Блоки разбивают базис и каждый из них устойчив под T_i, τ_i ∈ S_μ"""
    if sorted(k for b in blocks for k in b.basis) != list(range(m.dim)):
        return False
    for block in blocks:
        span = set(block.basis)
        for i in young_generators(mu):
            columns = m.gens[i - 1].columns
            if any(not set(columns[k]) <= span for k in block.basis):
                return False
    return True


def hecke_battery(n: int, field_spec: FieldSpec) -> dict:
    """
    Инварианты индуцированных модулей H_n(q) для всех композиций n и всех
    одномерных представлений: точность комплексов трех видов, гомотопия,
    явные собственные базисы, Hom из k_alt, скручивание, транспонирование,
    формула размерности Hom и ее симметрия, Макки, вложения, 0-Гекке и прообразы.
    """
    q = field_spec.q
    counts: Dict[str, List[int]] = {}
    failures: List[str] = []

    def record(name: str, ok: bool, what: str) -> None:
        entry = counts.setdefault(name, [0, 0])
        entry[0] += int(bool(ok))
        entry[1] += 1
        if not ok:
            failures.append(f"{name}: {what}")

    modules = []
    for lam in compositions(n):
        for chi in one_dim_reps(lam, q):
            modules.append((lam, chi, induced_module(n, lam, chi, field_spec)))
    finest = tuple([1] * n)
    for lam, chi, m in modules:
        what = f"{format_composition(lam)}[{chi.letters()}]"
        try:
            for kind in RELATION_KINDS:
                record(f"exactness-{kind}", not any(module_exactness(m, kind)), what)
            record("homotopy", homotopy_check(m, "a").ok, what)
            for i in range(1, n):
                ker_ok, im_ok = explicit_eigenbases(m, i)
                record("eigenbases", ker_ok and im_ok, f"{what} i={i}")
            record("alt-hom", alt_hom_dim(m) == (1 if is_alternating(chi) else 0), what)
            twisted = induced_module(n, lam, tilde_rep(chi), field_spec)
            record("twist", find_isomorphism(twisted, twisted_module(m)) is not None, what)
            if q:
                record("transpose", find_isomorphism(transpose_module(m), m) is not None, what)
            for mu in compositions(n):
                blocks = mackey_restrict(m, mu)
                record("mackey", _mackey_blocks_ok(m, mu, blocks), f"{what} mu={format_composition(mu)}")
                if n > 1:
                    x_ok, y_ok = inclusion_check(m, finest, mu)
                    record("inclusion", x_ok and y_ok, f"{what} mu={format_composition(mu)}")
        except (ValueError, ZeroDivisionError) as e:
            logger.error(f"Hecke battery n={n} failed on {what}: {e}", exc_info=True)
            record("module", False, f"{what}: {e}")

    if q:
        # размерности Hom(N, M) по формуле и по решению линейной системы
        dims = {}
        for a, (lam, chi, m) in enumerate(modules):
            for b, (mu, zeta, other) in enumerate(modules):
                dims[(a, b)] = hom_space(m, other).dim
                pair = f"{format_composition(mu)}[{zeta.letters()}] -> {format_composition(lam)}[{chi.letters()}]"
                record("hom-formula", dims[(a, b)] == hom_dim_formula(mu, zeta, lam, chi), pair)
        for (a, b), value in dims.items():
            if a < b:
                record("hom-symmetry", value == dims[(b, a)], f"modules {a}, {b}")
    if q == -1:
        trivial = [(lam, m) for lam, chi, m in modules if chi.letters() == "t" * len(chi.letters())]
        for lam, m in trivial:
            for mu, other in trivial:
                expected = len(trivial_intersection_reps(mu, lam))
                record("free-factor", free_factor_hom_dim(m, other) == expected,
                       f"{format_composition(mu)} -> {format_composition(lam)}")

    if q and n > 1:
        q_inv = q.inverse()
        for lam in compositions(n):
            for mu in compositions(n):
                size = len(dist_reps(n, lam)) * len(dist_reps(n, mu))
                pair = f"lam={format_composition(lam)}, mu={format_composition(mu)}"
                reps = {r.letters(): r for r in (trivial_rep(lam, q), alternating_rep(lam, q))}
                reps_prime = {r.letters(): r for r in (trivial_rep(mu, q_inv), alternating_rep(mu, q_inv))}
                try:
                    for chi in reps.values():
                        for chi_prime in reps_prime.values():
                            zero_hecke_gr_action(lam, mu, chi, chi_prime)
                            record("zero-hecke-relations", True, pair)
                            if size <= ISOMORPHISM_DIM_LIMIT:
                                record("zero-hecke-decomposition",
                                       zero_hecke_decomposition(lam, mu, chi, chi_prime).ok, pair)
                    record("preimage", preimage_check(lam, mu, field_spec, q).ok, pair)
                except (ValueError, ZeroDivisionError) as e:
                    logger.error(f"Hecke battery n={n} failed on {pair}: {e}", exc_info=True)
                    record("tensor-pair", False, f"{pair}: {e}")

    status = "fail" if failures else "pass"
    if failures:
        logger.error(f"Hecke battery n={n}: {len(failures)} failure(s), first: {failures[0]}")
    return {
        "status": status,
        "modules": len(modules),
        "counts": {name: value for name, value in sorted(counts.items())},
        "failures": failures[:20],
    }


# --- Запуск ---

def _run_task(task: Tuple[CheckConfig, str, str]) -> Tuple[dict, float]:
    cfg, name, key = task
    started = time.perf_counter()
    logger.info(f"Check {name} [{key}] started")
    try:
        result = CHECKS[name][1](cfg, key)
    except Exception as e:
        logger.error(f"Check {name} [{key}] raised {type(e).__name__}: {e}", exc_info=True)
        result = {"status": "error", "error": f"{type(e).__name__}: {e}"}
    elapsed = time.perf_counter() - started
    log = logger.error if result["status"] in FAILING else logger.info
    log(f"Check {name} [{key}] finished with {result['status']} in {elapsed:.2f}s")
    return result, elapsed


def run_suite(cfg: CheckConfig) -> CheckReport:
    """Выполняет выбранные проверки; результаты собираются по порядку задач"""
    cfg.validate()
    tasks = [(name, key) for name in cfg.checks for key in CHECKS[name][0](cfg)]
    logger.info(f"Running {len(tasks)} task(s) for checks {list(cfg.checks)} with {cfg.jobs} job(s)")
    started = time.perf_counter()
    payload = [(cfg, name, key) for name, key in tasks]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(_run_task, payload))
    else:
        outcomes = [_run_task(task) for task in payload]

    report = CheckReport(cfg.describe())
    for name in cfg.checks:
        report.results[name] = {"status": "pass", "units": {}}
        report.timing[name] = 0.0
    for (name, key), (result, elapsed) in zip(tasks, outcomes):
        entry = report.results[name]
        entry["units"][key] = result
        entry["status"] = _worst(entry["status"], result["status"])
        report.timing[name] = round(report.timing[name] + elapsed, 3)
    report.timing["total"] = round(time.perf_counter() - started, 3)
    if report.failed:
        logger.error(f"Checks failed: {report.failed}")
    else:
        logger.info(f"All {len(cfg.checks)} check(s) passed or reported unmet hypotheses")
    return report


def report_path(out: str) -> str:
    """Голое имя файла кладется в REPORT_DIR"""
    return out if os.path.dirname(out) else os.path.join(REPORT_DIR, out)


def report_text(report: CheckReport, include_timing: bool = True) -> str:
    return dump_json(report.to_document(include_timing))


def emit_report(report: CheckReport, path: str, include_timing: bool = True) -> str:
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, "w", encoding="utf-8") as f:
        f.write(report_text(report, include_timing))
    logger.info(f"Report written to {path}")
    return path


# --- Калькуляторы для CLI ---

def homdim_report(lam_text: str, mu_text: str, chi_letters: str, zeta_letters: str, field_spec: FieldSpec) -> dict:
    """dim Hom(Ind_μ ζ, Ind_λ χ) по формуле и по решению системы"""
    lam, mu = parse_composition(lam_text), parse_composition(mu_text)
    if sum(lam) != sum(mu):
        raise ConfigError(f"Compositions {lam_text} and {mu_text} have different sizes")
    q = field_spec.q
    chi, zeta = rep_from_letters(lam, chi_letters, q), rep_from_letters(mu, zeta_letters, q)
    n = sum(lam)
    computed = hom_space(induced_module(n, lam, chi, field_spec), induced_module(n, mu, zeta, field_spec)).dim
    result = {"lam": list(lam), "mu": list(mu), "chi": chi.letters(), "zeta": zeta.letters(),
              "q": format_scalar(q), "computed": computed}
    if q:
        result["formula"] = hom_dim_formula(mu, zeta, lam, chi)
    return result


def mackey_report(lam_text: str, mu_text: str, chi_letters: str, field_spec: FieldSpec) -> dict:
    lam, mu = parse_composition(lam_text), parse_composition(mu_text)
    if sum(lam) != sum(mu):
        raise ConfigError(f"Compositions {lam_text} and {mu_text} have different sizes")
    chi = rep_from_letters(lam, chi_letters, field_spec.q)
    m = induced_module(sum(lam), lam, chi, field_spec)
    blocks = []
    for block in mackey_restrict(m, mu):
        blocks.append({
            "rep": format_perm(block.rep),
            "nu": list(block.nu),
            "chi_pi": block.chi_pi.describe(),
            "basis": [format_perm(m.basis[k]) for k in block.basis],
        })
    return {"lam": list(lam), "mu": list(mu), "chi": chi.letters(), "dim": m.dim, "blocks": blocks}


def dims_report(sym: HeckeSymmetry, name: str, nmax: int, sym_prime: Optional[HeckeSymmetry] = None) -> dict:
    algebra = algebra_by_name(name, sym, sym_prime)
    return {"algebra": algebra.label or name, "generators": algebra.d, "dims": component_dims(algebra, nmax)}
