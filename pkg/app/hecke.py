"""
Алгебра Гекке H_n(q) в стандартном базисе, одномерные представления
параболических подалгебр, индуцированные модули, ограничение Макки,
формула размерности Hom и специальные элементы x_i, y_i, x_μ.

Модуль задается матрицами образующих T_1..T_{n-1}, действующими на столбцы.
Параметр q хранится в самом элементе или модуле: H'_n = H_n(q⁻¹) над тем же полем.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.scalars import FieldSpec, Scalar, format_scalar, q_integer
from app.symcomb import (
    Composition, Perm, blocks, block_of, deodhar_partition,
    dist_reps, double_coset, double_dist_reps, has_left_descent, identity, left_mul_simple,
    make_composition, perm_inverse, perm_length, reduced_word, right_coset_reps, right_mul_simple,
    trivial_intersection_reps, young_generators, young_subgroup,
)
from app.linalg import (
    ChainComplex, Matrix, Subspace, Vector, homology_dims, image,
    induced_map, intersect_all, kernel, maps_into, orthogonal_complement, preimage,
    quotient_complex, rank, sum_all, vec_axpy,
)

logger = logging.getLogger(__name__)


class HeckeMismatchError(ValueError):
    """Элементы или модули с разными n, полем или параметром q"""


class InvalidRepresentationError(ValueError):
    """Значение одномерного представления вне {q, -1}"""


class PreconditionError(ValueError):
    """Нарушено условие применимости (например, q = 0)"""


class RelationError(ValueError):
    """Построенные матрицы не удовлетворяют определяющим соотношениям"""


# --- Элементы алгебры ---

@dataclass(eq=False)
class HeckeElt:
    """Σ c_σ T_σ; нулевые коэффициенты не хранятся"""
    n: int
    field: FieldSpec
    q: Scalar
    terms: Dict[Perm, Scalar]

    def _check(self, other: "HeckeElt") -> None:
        if self.n != other.n or self.q != other.q or self.field.min_poly != other.field.min_poly:
            raise HeckeMismatchError(f"Hecke elements differ: n={self.n}/{other.n}, q={self.q}/{other.q}")

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        return hecke_add(self, other)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return hecke_add(self, hecke_scale(other, -self.field.one))

    def __mul__(self, other) -> "HeckeElt":
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        return hecke_scale(self, other)

    def __rmul__(self, other) -> "HeckeElt":
        return hecke_scale(self, other)

    def __neg__(self) -> "HeckeElt":
        return hecke_scale(self, -self.field.one)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.q == other.q and self.terms == other.terms

    def coefficient(self, sigma: Perm) -> Scalar:
        return self.terms.get(tuple(sigma), self.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def describe(self) -> Dict[str, str]:
        return {" ".join(map(str, s)): format_scalar(c) for s, c in sorted(self.terms.items(), key=lambda t: (perm_length(t[0]), t[0]))}

    def __repr__(self) -> str:
        return f"HeckeElt(n={self.n}, {self.describe()})"


def _param(field_spec: FieldSpec, q: Optional[Scalar]) -> Scalar:
    return field_spec.q if q is None else q


def hecke_basis(n: int, sigma: Sequence[int], field_spec: FieldSpec, q: Scalar = None) -> HeckeElt:
    sigma = tuple(sigma) if sigma else identity(n)
    if len(sigma) != n:
        raise HeckeMismatchError(f"Permutation {sigma} has window {len(sigma)}, expected {n}")
    return HeckeElt(n, field_spec, _param(field_spec, q), {sigma: field_spec.one})


def hecke_scalar(n: int, value, field_spec: FieldSpec, q: Scalar = None) -> HeckeElt:
    if not isinstance(value, Scalar):
        value = field_spec.from_int(value)
    terms = {identity(n): value} if value else {}
    return HeckeElt(n, field_spec, _param(field_spec, q), terms)


def hecke_generator(n: int, i: int, field_spec: FieldSpec, q: Scalar = None) -> HeckeElt:
    if not 1 <= i <= n - 1:
        raise HeckeMismatchError(f"Generator T_{i} does not exist in H_{n}")
    return hecke_basis(n, left_mul_simple(i, identity(n)), field_spec, q)


def hecke_add(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a._check(b)
    terms = dict(a.terms)
    vec_axpy(terms, a.field.one, b.terms)
    return HeckeElt(a.n, a.field, a.q, terms)


def hecke_scale(a: HeckeElt, coef) -> HeckeElt:
    if not isinstance(coef, Scalar):
        coef = a.field.from_int(coef)
    if not coef:
        return HeckeElt(a.n, a.field, a.q, {})
    return HeckeElt(a.n, a.field, a.q, {s: coef * c for s, c in a.terms.items()})


def _left_generator(i: int, terms: Dict[Perm, Scalar], q: Scalar) -> Dict[Perm, Scalar]:
    """T_i · Σ c_w T_w по правилу для образующей"""
    result: Dict[Perm, Scalar] = {}
    q_minus_one = q - 1
    for w, c in terms.items():
        moved = left_mul_simple(i, w)
        if not has_left_descent(w, i):
            vec_axpy(result, c, {moved: q.field.one})
        else:
            vec_axpy(result, c * q_minus_one, {w: q.field.one})
            vec_axpy(result, c * q, {moved: q.field.one})
    return result


def hecke_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Произведение: T_σ·b раскрывается по приведенному слову σ справа налево"""
    a._check(b)
    result: Dict[Perm, Scalar] = {}
    for sigma, coef in a.terms.items():
        current = b.terms
        for i in reversed(reduced_word(sigma)):
            current = _left_generator(i, current, a.q)
        vec_axpy(result, coef, current)
    return HeckeElt(a.n, a.field, a.q, result)


def tilde_twist(a: HeckeElt) -> HeckeElt:
    """Образ при автоморфизме T_i ↦ q-1-T_i"""
    n = a.n
    result = hecke_scalar(n, 0, a.field, a.q)
    twisted_gens = {
        i: hecke_scalar(n, a.q - 1, a.field, a.q) - hecke_generator(n, i, a.field, a.q)
        for i in range(1, n)
    }
    for sigma, coef in a.terms.items():
        term = hecke_scalar(n, coef, a.field, a.q)
        for i in reduced_word(sigma):
            term = hecke_mul(term, twisted_gens[i])
        result = result + term
    return result


def x_parabolic(mu: Composition, field_spec: FieldSpec, q: Scalar = None) -> HeckeElt:
    """x_μ = Σ_{σ ∈ S_μ} T_σ"""
    n = sum(mu)
    return HeckeElt(n, field_spec, _param(field_spec, q), {s: field_spec.one for s in young_subgroup(make_composition(mu, n))})


def _alternating_sum(n: int, perms: Sequence[Perm], field_spec: FieldSpec, q: Scalar) -> HeckeElt:
    m = max((perm_length(s) for s in perms), default=0)
    terms = {}
    for sigma in perms:
        length = perm_length(sigma)
        coef = q ** (m - length)
        terms[sigma] = -coef if length % 2 else coef
    return HeckeElt(n, field_spec, q, {s: c for s, c in terms.items() if c})


def parabolic_alt_sum(lam: Composition, field_spec: FieldSpec, q: Scalar = None) -> HeckeElt:
    """y = Σ_{σ ∈ D(S_λ\\S_n)} (-1)^ℓ(σ) q^(m-ℓ(σ)) T_σ"""
    n = sum(lam)
    return _alternating_sum(n, right_coset_reps(make_composition(lam, n)), field_spec, _param(field_spec, q))


def homotopy_elements(n: int, i: int, field_spec: FieldSpec, q: Scalar = None) -> Tuple[HeckeElt, HeckeElt]:
    """x_i по D(S_{i+1}/S_i) и y_i по D(S^▽_{i+1}\\S^▽_i)"""
    if not 0 <= i < n:
        raise PreconditionError(f"Homotopy elements need 0 <= i < n, got i={i}, n={n}")
    q = _param(field_spec, q)
    e = identity(n)
    # D_i = {e, τ_i, τ_{i-1}τ_i, ..., τ_1···τ_i}
    x_perms, w = [e], e
    for j in range(i, 0, -1):
        w = left_mul_simple(j, w)
        x_perms.append(w)
    x = HeckeElt(n, field_spec, q, {s: field_spec.one for s in x_perms})
    # D^▽_i = {e, τ_{i+1}, τ_{i+1}τ_{i+2}, ..., τ_{i+1}···τ_{n-1}}
    y_terms, w = {e: q ** (n - 1 - i)}, e
    for length, j in enumerate(range(i + 1, n), start=1):
        w = right_mul_simple(w, j)
        coef = q ** (n - 1 - i - length)
        y_terms[w] = -coef if length % 2 else coef
    y = HeckeElt(n, field_spec, q, {s: c for s, c in y_terms.items() if c})
    return x, y


# --- Одномерные представления ---

@dataclass(frozen=True)
class OneDimRep:
    """χ: H_λ → k, значения по блокам λ длины >= 2 (None для одноэлементных блоков)"""
    lam: Composition
    q: Scalar
    values: Tuple[Optional[Scalar], ...]

    def value(self, j: int) -> Scalar:
        """χ(T_j) для τ_j ∈ B_λ"""
        if j not in young_generators(self.lam):
            raise InvalidRepresentationError(f"T_{j} is not a generator of H_{self.lam}")
        return self.values[block_of(self.lam, j)]

    def letters(self) -> str:
        return "".join("t" if v == self.q else "a" for v in self.values if v is not None)

    def describe(self) -> dict:
        return {"lam": list(self.lam), "letters": self.letters(),
                "values": [None if v is None else format_scalar(v) for v in self.values]}


def one_dim_rep(lam: Sequence[int], values: Sequence, q: Scalar) -> OneDimRep:
    lam = make_composition(lam)
    values = tuple(values)
    if len(values) != len(lam):
        raise InvalidRepresentationError(f"Expected {len(lam)} block values for {lam}, got {len(values)}")
    allowed = (q, -q.field.one)
    checked = []
    for part, value in zip(lam, values):
        if part == 1:
            checked.append(None)
            continue
        if value is None or value not in allowed:
            raise InvalidRepresentationError(f"Value {value} outside {{q, -1}} = {{{q}, -1}} on block of size {part}")
        checked.append(value)
    return OneDimRep(lam, q, tuple(checked))


def trivial_rep(lam: Sequence[int], q: Scalar) -> OneDimRep:
    return one_dim_rep(lam, [q] * len(lam), q)


def alternating_rep(lam: Sequence[int], q: Scalar) -> OneDimRep:
    return one_dim_rep(lam, [-q.field.one] * len(lam), q)


def rep_from_letters(lam: Sequence[int], letters: str, q: Scalar) -> OneDimRep:
    """Буквы t/a: либо для каждого блока, либо только для блоков длины >= 2"""
    lam = make_composition(lam)
    letters = letters.strip().lower()
    wide = [k for k, part in enumerate(lam) if part > 1]
    if len(letters) == len(lam):
        chosen = dict(enumerate(letters))
    elif len(letters) == len(wide):
        chosen = dict(zip(wide, letters))
    else:
        raise InvalidRepresentationError(f"Letters {letters!r} do not match composition {lam}")
    values = []
    for k in range(len(lam)):
        letter = chosen.get(k, "t")
        if letter not in ("t", "a"):
            raise InvalidRepresentationError(f"Unknown representation letter {letter!r}; use t or a")
        values.append(q if letter == "t" else -q.field.one)
    return one_dim_rep(lam, values, q)


def one_dim_reps(lam: Sequence[int], q: Scalar) -> List[OneDimRep]:
    """Все одномерные представления H_λ (при q = -1 выбор единственен)"""
    lam = make_composition(lam)
    wide = [k for k, part in enumerate(lam) if part > 1]
    choices = [q] if q == -1 else [q, -q.field.one]
    result = []
    for combo in product(choices, repeat=len(wide)):
        values = [q] * len(lam)
        for k, v in zip(wide, combo):
            values[k] = v
        result.append(one_dim_rep(lam, values, q))
    return result


def tilde_rep(chi: OneDimRep) -> OneDimRep:
    """χ̃(T_i) = q-1-χ(T_i)"""
    values = [None if v is None else chi.q - 1 - v for v in chi.values]
    return one_dim_rep(chi.lam, [chi.q if v is None else v for v in values], chi.q)


def is_alternating(chi: OneDimRep) -> bool:
    return all(v is None or v == -1 for v in chi.values)


# --- Модули ---

@dataclass(eq=False)
class ModuleRep:
    """Левый H_n(q)-модуль: матрицы образующих на столбцах"""
    n: int
    field: FieldSpec
    q: Scalar
    dim: int
    gens: List[Matrix]
    label: str = ""
    basis: tuple = ()

    def __post_init__(self):
        self._words: Dict[Perm, Matrix] = {}

    def generator(self, i: int) -> Matrix:
        return self.gens[i - 1]


@dataclass(eq=False)
class InducedModule(ModuleRep):
    """H_n ⊗_{H_λ} k(χ) с базисом T_σ c, σ ∈ D_λ"""
    lam: Composition = ()
    chi: Optional[OneDimRep] = None

    def index(self, sigma: Perm) -> int:
        if not hasattr(self, "_index"):
            self._index = {s: k for k, s in enumerate(self.basis)}
        return self._index[sigma]


def check_module_relations(m: ModuleRep) -> None:
    """Квадратичное соотношение и соотношения кос; RelationError при нарушении"""
    one = Matrix.identity(m.field, m.dim)
    q_id = Matrix.scalar(m.field, m.dim, m.q)
    for i, g in enumerate(m.gens, start=1):
        if not ((g - q_id) @ (g + one)).is_zero():
            logger.error(f"Module {m.label or '?'}: quadratic relation fails for T_{i}")
            raise RelationError(f"(T_{i} - q)(T_{i} + 1) != 0 in module {m.label or '?'}")
    _check_braids(m.gens, m.label)


def _check_braids(gens: Sequence[Matrix], label: str) -> None:
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            ga, gb = gens[a], gens[b]
            if b == a + 1:
                ok = ga @ gb @ ga == gb @ ga @ gb
            else:
                ok = ga @ gb == gb @ ga
            if not ok:
                logger.error(f"Module {label or '?'}: braid relation fails for T_{a + 1}, T_{b + 1}")
                raise RelationError(f"Braid relation fails for T_{a + 1}, T_{b + 1} in module {label or '?'}")


def module_rep(n: int, field_spec: FieldSpec, q: Scalar, gens: Sequence[Matrix], label: str = "",
               dim: int = None) -> ModuleRep:
    """Проверенный модуль по матрицам образующих"""
    if len(gens) != max(n - 1, 0):
        raise HeckeMismatchError(f"H_{n} needs {max(n - 1, 0)} generator matrices, got {len(gens)}")
    if dim is None:
        dim = gens[0].nrows if gens else 1
    for g in gens:
        if (g.nrows, g.ncols) != (dim, dim):
            raise HeckeMismatchError(f"Generator matrices must be {dim}x{dim}, got {g.nrows}x{g.ncols}")
    m = ModuleRep(n, field_spec, q, dim, list(gens), label)
    check_module_relations(m)
    return m


def induced_module(n: int, lam: Sequence[int], chi: OneDimRep, field_spec: FieldSpec = None) -> InducedModule:
    """Матрицы действия по трем случаям разбиения Деодара"""
    lam = make_composition(lam, n)
    if tuple(chi.lam) != tuple(lam):
        raise InvalidRepresentationError(f"Representation is defined on H_{chi.lam}, not H_{lam}")
    q = chi.q
    field_spec = q.field if field_spec is None else field_spec
    basis = dist_reps(n, lam)
    index = {s: k for k, s in enumerate(basis)}
    one = field_spec.one
    gens = []
    for i in range(1, n):
        split = deodhar_partition(lam, i)
        columns: List[Vector] = [None] * len(basis)
        for sigma in split.a_set:
            columns[index[sigma]] = {index[left_mul_simple(i, sigma)]: one}
        for sigma in split.tau_a_set:
            col = {index[left_mul_simple(i, sigma)]: q}
            if q != 1:
                col[index[sigma]] = q - 1
            columns[index[sigma]] = col
        for sigma in split.b_set:
            value = chi.value(split.b_index[sigma])
            columns[index[sigma]] = {index[sigma]: value} if value else {}
        gens.append(Matrix.from_columns(field_spec, len(basis), columns))
    label = f"Ind{list(lam)}[{chi.letters()}]"
    module = InducedModule(n, field_spec, q, len(basis), gens, label, basis, lam, chi)
    check_module_relations(module)
    logger.debug(f"Built induced module {label} over q={q}: dim {len(basis)}")
    return module


def direct_sum(modules: Sequence[ModuleRep]) -> ModuleRep:
    if not modules:
        raise HeckeMismatchError("Direct sum of an empty family")
    first = modules[0]
    for m in modules[1:]:
        if m.n != first.n or m.q != first.q:
            raise HeckeMismatchError(f"Cannot sum modules over H_{m.n}({m.q}) and H_{first.n}({first.q})")
    total = sum(m.dim for m in modules)
    gens = []
    for i in range(first.n - 1):
        rows: List[Vector] = []
        offset = 0
        for m in modules:
            for row in m.gens[i].rows:
                rows.append({offset + c: v for c, v in row.items()})
            offset += m.dim
        gens.append(Matrix(first.field, total, total, rows))
    label = " + ".join(m.label or "?" for m in modules)
    return ModuleRep(first.n, first.field, first.q, total, gens, label)


def twisted_module(m: ModuleRep) -> ModuleRep:
    """M̃: T_i действует как q-1-T_i"""
    shift = Matrix.scalar(m.field, m.dim, m.q - 1)
    return ModuleRep(m.n, m.field, m.q, m.dim, [shift - g for g in m.gens], f"~{m.label}")


def transpose_module(m: ModuleRep) -> ModuleRep:
    """M* как левый модуль через антиинволюцию T_σ ↦ T_{σ⁻¹}"""
    return ModuleRep(m.n, m.field, m.q, m.dim, [g.transpose() for g in m.gens], f"{m.label}*")


# --- Действие элементов ---

def _word_matrix(m: ModuleRep, sigma: Perm) -> Matrix:
    cached = m._words.get(sigma)
    if cached is not None:
        return cached
    word = reduced_word(sigma)
    if not word:
        result = Matrix.identity(m.field, m.dim)
    else:
        first = word[0]
        result = m.gens[first - 1] @ _word_matrix(m, left_mul_simple(first, sigma))
    m._words[sigma] = result
    return result


def hecke_act(a: HeckeElt, m: ModuleRep) -> Matrix:
    """Матрица элемента a на модуле"""
    if a.n != m.n or a.q != m.q:
        raise HeckeMismatchError(f"Element of H_{a.n}({a.q}) cannot act on a module over H_{m.n}({m.q})")
    total = Matrix.zero(m.field, m.dim, m.dim)
    for sigma, coef in a.terms.items():
        total = total + _word_matrix(m, sigma).scale(coef)
    return total


def hecke_apply(a: HeckeElt, m: ModuleRep, vector: Vector) -> Vector:
    """a·v последовательным применением образующих"""
    result: Vector = {}
    for sigma, coef in a.terms.items():
        current = vector
        for i in reversed(reduced_word(sigma)):
            current = m.gens[i - 1].apply(current)
        vec_axpy(result, coef, current)
    return result


# --- Макки и Hom ---

@dataclass
class MackeyBlock:
    """Слагаемое M(π) ограничения на H_μ"""
    rep: Perm
    nu: Composition
    chi_pi: OneDimRep
    basis: List[int]


def _twisted_value(chi: OneDimRep, pi: Perm, i: int) -> Scalar:
    """χ_π(T_i) = χ(T_{π⁻¹(i)}) для τ_i ∈ S_μ ∩ πS_λπ⁻¹"""
    inverse = perm_inverse(pi)
    return chi.value(min(inverse[i - 1], inverse[i]))


def _restricted_rep(chi: OneDimRep, pi: Perm, nu: Composition) -> OneDimRep:
    values = []
    for block in blocks(nu):
        values.append(_twisted_value(chi, pi, block[0]) if len(block) > 1 else chi.q)
    return one_dim_rep(nu, values, chi.q)


def mackey_restrict(m: InducedModule, mu: Sequence[int]) -> List[MackeyBlock]:
    mu = make_composition(mu, m.n)
    result = []
    for datum in double_dist_reps(mu, m.lam):
        coset = set(double_coset(mu, datum.rep, m.lam))
        basis = [k for k, sigma in enumerate(m.basis) if sigma in coset]
        result.append(MackeyBlock(datum.rep, datum.nu, _restricted_rep(m.chi, datum.rep, datum.nu), basis))
    logger.debug(f"Mackey restriction of {m.label} to H_{list(mu)}: block sizes {[len(b.basis) for b in result]}")
    return result


def hom_dim_formula(mu: Sequence[int], zeta: OneDimRep, lam: Sequence[int], chi: OneDimRep) -> int:
    """Число π ∈ _μD_λ, для которых ζ(T_i) = χ_π(T_i) на S_μ ∩ πS_λπ⁻¹"""
    if not chi.q:
        raise PreconditionError("Hom-dimension formula requires q != 0")
    if zeta.q != chi.q:
        raise HeckeMismatchError(f"Representations over different parameters {zeta.q} and {chi.q}")
    mu, lam = make_composition(mu), make_composition(lam)
    count = 0
    for datum in double_dist_reps(mu, lam):
        if all(zeta.value(i) == _twisted_value(chi, datum.rep, i) for i in datum.nu_generators):
            count += 1
    return count


def hom_space(m: ModuleRep, n: ModuleRep, generators: Iterable[int] = None) -> Subspace:
    """{Φ : Φ·G_i(N) = G_i(M)·Φ}, координаты Φ[r][c] с индексом r·dim N + c"""
    if m.n != n.n or m.q != n.q:
        raise HeckeMismatchError(f"Modules over H_{m.n}({m.q}) and H_{n.n}({n.q})")
    gens = range(1, m.n) if generators is None else sorted(generators)
    dm, dn = m.dim, n.dim
    one = m.field.one
    minus_one = -one

    def equations():
        for i in gens:
            gm, gn = m.gens[i - 1], n.gens[i - 1]
            gn_cols = gn.columns
            for r in range(dm):
                gm_row = gm.rows[r]
                for c in range(dn):
                    eq: Vector = {}
                    for k, value in gn_cols[c].items():
                        vec_axpy(eq, value, {r * dn + k: one})
                    for k, value in gm_row.items():
                        vec_axpy(eq, minus_one * value, {k * dn + c: one})
                    if eq:
                        yield eq

    relations = Subspace.span(m.field, dm * dn, equations())
    return orthogonal_complement(relations)


def hom_basis(m: ModuleRep, n: ModuleRep, space: Subspace = None) -> List[Matrix]:
    """Базис Hom(N, M) в виде матриц dim M × dim N"""
    space = hom_space(m, n) if space is None else space
    result = []
    for row in space.rows:
        rows = [{} for _ in range(m.dim)]
        for index, value in row.items():
            r, c = divmod(index, n.dim)
            rows[r][c] = value
        result.append(Matrix(m.field, m.dim, n.dim, rows))
    return result


def find_isomorphism(m: ModuleRep, n: ModuleRep, attempts: int = 8, seed: int = 0) -> Optional[Matrix]:
    """Обратимый сплетающий оператор N → M или None"""
    if m.dim != n.dim:
        return None
    basis = hom_basis(m, n)
    if not basis:
        return None
    # Независимые случайные коэффициенты при каждом Φ_j; det(Σ c_j Φ_j) ≢ 0, если изоморфизм есть
    rng = random.Random(seed)
    bound = 4 * m.dim + 1
    for _ in range(attempts):
        candidate = Matrix.zero(m.field, m.dim, n.dim)
        for phi in basis:
            candidate = candidate + phi.scale(m.field.from_int(rng.randint(-bound, bound)))
        if rank(candidate) == m.dim:
            return candidate
    logger.debug(f"No invertible intertwiner found for {m.label} and {n.label} after {attempts} attempts")
    return None


# --- Подпространства U_i и комплексы ---

RELATION_KINDS = ("a", "b", "c")


def relation_subspaces(m: ModuleRep, kind: str) -> List[Subspace]:
    """a: Ker(T_i - q), b: Im(T_i + 1), c: (T_i - q)M"""
    one = Matrix.identity(m.field, m.dim)
    q_id = Matrix.scalar(m.field, m.dim, m.q)
    if kind == "a":
        return [kernel(g - q_id) for g in m.gens]
    if kind == "b":
        return [image(g + one) for g in m.gens]
    if kind == "c":
        return [image(g - q_id) for g in m.gens]
    raise ValueError(f"Unknown subspace kind {kind!r}; expected one of {RELATION_KINDS}")


def module_complex(m: ModuleRep, kind: str) -> ChainComplex:
    """K_•(M; (U_i))"""
    return quotient_complex(m.field, m.dim, relation_subspaces(m, kind))


def module_exactness(m: ModuleRep, kind: str) -> List[int]:
    dims = homology_dims(module_complex(m, kind))
    if any(dims):
        logger.warning(f"K(M;U) for {m.label} kind {kind} has homology {dims}")
    return dims


def explicit_eigenbases(m: InducedModule, i: int) -> Tuple[bool, bool]:
    """Сравнивает явные порождающие Ker(T_i - q) и Im(T_i + 1) с вычисленными"""
    split = deodhar_partition(m.lam, i)
    one = m.field.one
    paired = [{m.index(left_mul_simple(i, s)): one, m.index(s): one} for s in split.a_set]
    ker_vectors, im_vectors = list(paired), list(paired)
    for sigma in split.b_set:
        value = m.chi.value(split.b_index[sigma])
        if value == m.q:
            ker_vectors.append({m.index(sigma): one})
        if value != -1:
            im_vectors.append({m.index(sigma): one})
    ker_span = Subspace.span(m.field, m.dim, ker_vectors)
    im_span = Subspace.span(m.field, m.dim, im_vectors)
    a_space, b_space = relation_subspaces_at(m, i)
    return ker_span == a_space, im_span == b_space


def relation_subspaces_at(m: ModuleRep, i: int) -> Tuple[Subspace, Subspace]:
    g = m.gens[i - 1]
    return kernel(g - Matrix.scalar(m.field, m.dim, m.q)), image(g + Matrix.identity(m.field, m.dim))


@dataclass
class HomotopyReport:
    """Проверка ∂_{i+1}s_i + s_{i-1}∂_i = [n]_q Id по степеням"""
    kind: str
    dims: List[int]
    holds: List[bool]

    @property
    def ok(self) -> bool:
        return all(self.holds)


def homotopy_check(m: ModuleRep, kind: str = "a") -> HomotopyReport:
    n = m.n
    complex_ = module_complex(m, kind)
    quotients = complex_.quotients
    homotopies = {}
    for i in range(n):
        x, y = homotopy_elements(n, i, m.field, m.q)
        homotopies[i] = induced_map(quotients[i], quotients[i + 1], hecke_act(hecke_mul(x, y), m))
    q_n = q_integer(m.field, n, m.q)
    holds = []
    for i in range(n + 1):
        size = complex_.spaces[i]
        total = Matrix.zero(m.field, size, size)
        if i < n:
            total = total + complex_.diffs[i + 1] @ homotopies[i]
        if i > 0:
            total = total + homotopies[i - 1] @ complex_.diffs[i]
        holds.append(total == Matrix.scalar(m.field, size, q_n))
    if not all(holds):
        logger.error(f"Homotopy identity fails for {m.label} kind {kind} at degrees {[i for i, h in enumerate(holds) if not h]}")
    return HomotopyReport(kind, list(complex_.spaces), holds)


def inclusion_check(m: ModuleRep, lam: Sequence[int], mu: Sequence[int], kind: str = "a") -> Tuple[bool, bool]:
    """x·Υ(λ) ⊆ Υ(μ) и y·Σ(μ) ⊆ Σ(λ) при S_λ ⊆ S_μ"""
    lam, mu = make_composition(lam, m.n), make_composition(mu, m.n)
    lam_gens, mu_gens = young_generators(lam), young_generators(mu)
    if not lam_gens <= mu_gens:
        raise PreconditionError(f"S_{list(lam)} is not contained in S_{list(mu)}")
    subspaces = relation_subspaces(m, kind)
    mu_group = set(young_subgroup(mu))
    left_reps = [s for s in dist_reps(m.n, lam) if s in mu_group]
    x = HeckeElt(m.n, m.field, m.q, {s: m.field.one for s in left_reps})
    y = _alternating_sum(m.n, sorted((perm_inverse(s) for s in left_reps), key=lambda s: (perm_length(s), s)), m.field, m.q)

    def upsilon(gens):
        return intersect_all(m.field, m.dim, [subspaces[j - 1] for j in sorted(gens)])

    def sigma(gens):
        return sum_all(m.field, m.dim, [subspaces[j - 1] for j in sorted(gens)])

    x_ok = maps_into(hecke_act(x, m), upsilon(lam_gens), upsilon(mu_gens))
    y_ok = maps_into(hecke_act(y, m), sigma(mu_gens), sigma(lam_gens))
    return x_ok, y_ok


# --- Проверки для модулей ---

def alt_hom_dim(m: ModuleRep) -> int:
    """dim Hom(k_alt, M): общее (-1)-собственное подпространство"""
    one = Matrix.identity(m.field, m.dim)
    return intersect_all(m.field, m.dim, [kernel(g + one) for g in m.gens]).dim


def free_factor_hom_dim(m: InducedModule, n: InducedModule) -> int:
    """dim {φ ∈ Hom(N, M) : φ(c') ∈ x_μ M}"""
    basis = hom_basis(m, n)
    if not basis:
        return 0
    x_mu = x_parabolic(n.lam, m.field, m.q)
    target = image(hecke_act(x_mu, m))
    evaluation = Matrix.from_columns(m.field, m.dim, [phi.column(0) for phi in basis])
    return preimage(evaluation, target).dim


# --- 0-Гекке ---

def _position(split, sigma: Perm) -> str:
    if sigma in split[0]:
        return "up"
    if sigma in split[1]:
        return "down"
    return "fixed"


def zero_hecke_gr_action(lam: Sequence[int], mu: Sequence[int], chi: OneDimRep, chi_prime: OneDimRep) -> ModuleRep:
    """Операторы T̊_i на базисе v_{x,y} (x ∈ S_n/S_λ старший индекс)"""
    q = chi.q
    if not q:
        raise PreconditionError("The graded 0-Hecke action needs q != 0")
    if chi_prime.q * q != 1:
        raise HeckeMismatchError(f"chi' must be over q^-1, got parameter {chi_prime.q}")
    n = sum(lam)
    lam, mu = make_composition(lam, n), make_composition(mu, n)
    field_spec = q.field
    xs, ys = dist_reps(n, lam), dist_reps(n, mu)
    index = {(x, y): k for k, (x, y) in enumerate(product(xs, ys))}
    one, minus_one = field_spec.one, -field_spec.one
    gens = []
    for i in range(1, n):
        split_x, split_y = deodhar_partition(lam, i), deodhar_partition(mu, i)
        sx = (set(split_x.a_set), set(split_x.tau_a_set))
        sy = (set(split_y.a_set), set(split_y.tau_a_set))
        columns: List[Vector] = []
        for x, y in product(xs, ys):
            px, py = _position(sx, x), _position(sy, y)
            tx = x if px == "fixed" else left_mul_simple(i, x)
            ty = y if py == "fixed" else left_mul_simple(i, y)
            here = index[(x, y)]
            if (px == "up" and py in ("up", "fixed")) or (px == "fixed" and py == "up"):
                col = {index[(tx, ty)]: one}
            elif px == "up" and py == "down":
                col = {}
            elif px == "down" and py == "up":
                col = {here: minus_one, index[(tx, ty)]: q}
            elif px == "down" or py == "down":
                col = {here: minus_one}
            else:
                product_value = chi.value(split_x.b_index[x]) * chi_prime.value(split_y.b_index[y])
                col = {} if product_value == 1 else {here: minus_one}
            columns.append(col)
        gens.append(Matrix.from_columns(field_spec, len(index), columns))
    zero_q = field_spec.zero
    label = f"grM[{list(lam)}|{list(mu)}]"
    module = ModuleRep(n, field_spec, zero_q, len(index), gens, label, tuple(index))
    check_module_relations(module)
    return module


@dataclass
class TensorPairModule:
    """M' ⊗ M над H'_n ⊗ H_n, 𝒯_i = T'_i ⊗ T_i (M' старший индекс)"""
    left: ModuleRep
    right: ModuleRep
    gens: List[Matrix]

    @property
    def n(self) -> int:
        return self.right.n

    @property
    def field(self) -> FieldSpec:
        return self.right.field

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    def calT(self, sigma: Perm) -> Matrix:
        """𝒯_σ = T'_σ ⊗ T_σ"""
        return _word_matrix(self.left, sigma).kron(_word_matrix(self.right, sigma))


def tensor_module_pair(left: ModuleRep, right: ModuleRep) -> TensorPairModule:
    q = right.q
    if left.n != right.n or left.q * q != 1:
        raise HeckeMismatchError(f"Need modules over H_n(q^-1) and H_n(q), got q'={left.q}, q={q}")
    gens = [gl.kron(gr) for gl, gr in zip(left.gens, right.gens)]
    one = Matrix.identity(right.field, left.dim * right.dim)
    for i, g in enumerate(gens, start=1):
        cubic = (g - one) @ (g + one.scale(q)) @ (g + one.scale(left.q))
        if not cubic.is_zero():
            raise RelationError(f"Cubic relation fails for calT_{i}")
    _check_braids(gens, f"{left.label} (x) {right.label}")
    return TensorPairModule(left, right, gens)


def tensor_subspaces(pair: TensorPairModule, kind: str) -> List[Subspace]:
    """image: (𝒯_i - 1)𝓜, kernel: Ker(𝒯_i - 1)"""
    one = Matrix.identity(pair.field, pair.dim)
    if kind == "image":
        return [image(g - one) for g in pair.gens]
    if kind == "kernel":
        return [kernel(g - one) for g in pair.gens]
    raise ValueError(f"Unknown tensor subspace kind {kind!r}; expected image or kernel")


def tensor_exactness(left: ModuleRep, right: ModuleRep, kind: str) -> List[int]:
    pair = tensor_module_pair(left, right)
    return homology_dims(quotient_complex(pair.field, pair.dim, tensor_subspaces(pair, kind)))


@dataclass
class PreimageReport:
    quotient_dim: int
    trivial_intersections: int
    y_maps_into: bool
    preimage_equal: bool

    @property
    def ok(self) -> bool:
        return self.quotient_dim == self.trivial_intersections and self.y_maps_into and self.preimage_equal


def preimage_check(lam: Sequence[int], mu: Sequence[int], field_spec: FieldSpec, q: Scalar = None) -> PreimageReport:
    """M = Ind_λ(triv) над q, M' = Ind_μ(triv) над q⁻¹; Σ, Σ_1 и y⁻¹(Σ_1)"""
    q = _param(field_spec, q)
    if not q:
        raise PreconditionError("Tensor pair modules need q != 0")
    n = sum(lam)
    q_inv = q.inverse()
    right = induced_module(n, lam, trivial_rep(lam, q), field_spec)
    left = induced_module(n, mu, trivial_rep(mu, q_inv), field_spec)
    pair = tensor_module_pair(left, right)
    subspaces = tensor_subspaces(pair, "kernel")
    total = sum_all(field_spec, pair.dim, subspaces)
    tail = sum_all(field_spec, pair.dim, subspaces[1:])
    y = Matrix.zero(field_spec, pair.dim, pair.dim)
    sigma = identity(n)
    for j in range(n):
        if j > 0:
            sigma = right_mul_simple(sigma, j)
        term = pair.calT(sigma)
        y = y + (term if j % 2 == 0 else -term)
    report = PreimageReport(
        quotient_dim=pair.dim - total.dim,
        trivial_intersections=len(trivial_intersection_reps(make_composition(mu), make_composition(lam))),
        y_maps_into=maps_into(y, total, tail),
        preimage_equal=preimage(y, tail) == total,
    )
    if not report.ok:
        logger.error(f"Preimage check fails for lam={list(lam)}, mu={list(mu)}: {report}")
    return report


@dataclass
class ZeroHeckeReport:
    summands: List[dict]
    isomorphic: bool
    gr_dims_match: bool

    @property
    def ok(self) -> bool:
        return self.isomorphic and self.gr_dims_match


def zero_hecke_decomposition(lam: Sequence[int], mu: Sequence[int], chi: OneDimRep, chi_prime: OneDimRep) -> ZeroHeckeReport:
    """N ≅ ⊕_π H_n(0) ⊗_{H_ν(π)(0)} k(ξ_π) и rank T̊_i = dim (𝒯_i - 1)𝓜"""
    graded = zero_hecke_gr_action(lam, mu, chi, chi_prime)
    n = graded.n
    field_spec = graded.field
    zero_q = field_spec.zero
    lam, mu = make_composition(lam, n), make_composition(mu, n)
    summands, modules = [], []
    for datum in double_dist_reps(mu, lam):
        values = []
        for block in blocks(datum.nu):
            if len(block) == 1:
                values.append(zero_q)
                continue
            i = block[0]
            product_value = _twisted_value(chi, datum.rep, i) * chi_prime.value(i)
            values.append(zero_q if product_value == 1 else -field_spec.one)
        xi = one_dim_rep(datum.nu, values, zero_q)
        modules.append(induced_module(n, datum.nu, xi, field_spec))
        summands.append({"rep": list(datum.rep), "nu": list(datum.nu), "xi": [format_scalar(v) for v in values]})
    target = direct_sum(modules) if modules else None
    isomorphic = target is not None and find_isomorphism(target, graded) is not None

    right = induced_module(n, lam, chi, field_spec)
    left = induced_module(n, mu, chi_prime, field_spec)
    pair = tensor_module_pair(left, right)
    actual = tensor_subspaces(pair, "image")
    gr_dims_match = all(rank(g) == u.dim for g, u in zip(graded.gens, actual))
    return ZeroHeckeReport(summands, isomorphic, gr_dims_match)
