"""
Симметрии Гекке R на V⊗V: проверка соотношений, встроенные семейства,
преобразования R̃, R^op, R*, R⁻¹, тензорные представления и алгебры
S(V,R), Λ(V,R), A(R',R), E(R',R).

Координаты V⊗V лексикографические: e_i⊗e_j имеет номер i·d + j.
Порождающее пространство V'*⊗V упорядочено так же: (f, v) -> f·d + v.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from app.scalars import FieldSpec, InvalidFieldError, Scalar, field_make, format_rational, parse_scalar
from app.hecke import (
    HeckeMismatchError, ModuleRep, PreconditionError, hecke_act, hom_basis, hom_space,
    module_rep, parabolic_alt_sum, tensor_exactness, tensor_module_pair,
)
from app.linalg import (
    Matrix, Subspace, balanced_tensor_dim, image, kernel, matrix_inverse,
)
from app.quadratic import (
    FrobeniusReport, QuadraticAlgebra, component_dims, frobenius_check, gorenstein_certificate,
    koszul_exactness, annihilator_inclusion_check, quadratic_dual, upsilon,
)

logger = logging.getLogger(__name__)

BASIS_CONVENTION = "lex-i-major"


class SymmetryValidationError(ValueError):
    """R не удовлетворяет соотношению Гекке или соотношению кос"""

    def __init__(self, message: str, relation: str, witness=None):
        super().__init__(message)
        self.relation = relation
        self.witness = witness


class SymmetryFileError(ValueError):
    """Ошибка в документе с описанием симметрии"""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass(eq=False)
class HeckeSymmetry:
    """Проверенная симметрия Гекке с параметром q"""
    d: int
    field: FieldSpec
    q: Scalar
    R: Matrix
    label: str = ""

    def __post_init__(self):
        self._tensor: Dict[int, ModuleRep] = {}

    def describe(self) -> dict:
        return {"label": self.label, "dim": self.d, "q": [format_rational(c) for c in self.q.coeffs]}


def shifted_operator(m: Matrix, d: int, n: int, i: int) -> Matrix:
    """Id^{⊗(i-1)} ⊗ M ⊗ Id^{⊗(n-i-1)} для M на W⊗W, dim W = d"""
    left = Matrix.identity(m.field, d ** (i - 1))
    right = Matrix.identity(m.field, d ** (n - i - 1))
    return left.kron(m).kron(right)


def flip_matrix(field_spec: FieldSpec, d: int) -> Matrix:
    """τ(e_i⊗e_j) = e_j⊗e_i"""
    one = field_spec.one
    return Matrix.from_columns(field_spec, d * d, [{j * d + i: one} for i in range(d) for j in range(d)])


def check_hecke_symmetry(d: int, field_spec: FieldSpec, r: Matrix, q: Scalar = None,
                         label: str = "") -> HeckeSymmetry:
    """(R + Id)(R - q·Id) = 0 и R_1R_2R_1 = R_2R_1R_2; иначе SymmetryValidationError"""
    q = field_spec.q if q is None else q
    size = d * d
    if (r.nrows, r.ncols) != (size, size):
        raise SymmetryValidationError(f"R must be {size}x{size}, got {r.nrows}x{r.ncols}", "shape")
    if not q:
        raise SymmetryValidationError("Hecke parameter q must be nonzero", "parameter")
    one = Matrix.identity(field_spec, size)
    hecke = (r + one) @ (r - one.scale(q))
    if not hecke.is_zero():
        witness = hecke.nonzero_entry()
        logger.error(f"Symmetry {label or '?'}: Hecke relation fails at {witness[:2]}")
        raise SymmetryValidationError(f"(R + Id)(R - q Id) != 0 at entry {witness[:2]}", "hecke", witness[:2])
    r1, r2 = shifted_operator(r, d, 3, 1), shifted_operator(r, d, 3, 2)
    braid = r1 @ r2 @ r1 - r2 @ r1 @ r2
    if not braid.is_zero():
        witness = braid.nonzero_entry()
        logger.error(f"Symmetry {label or '?'}: braid relation fails at {witness[:2]}")
        raise SymmetryValidationError(f"R_1R_2R_1 != R_2R_1R_2 at entry {witness[:2]}", "braid", witness[:2])
    logger.debug(f"Validated Hecke symmetry {label or '?'}: d={d}, q={q}")
    return HeckeSymmetry(d, field_spec, q, r, label)


# --- Встроенные симметрии ---

def drinfeld_jimbo(field_spec: FieldSpec, k: int) -> HeckeSymmetry:
    """Стандартная симметрия GL_q(k): q-аналог перестановки множителей"""
    if k < 1:
        raise ValueError(f"drinfeld_jimbo needs k >= 1, got {k}")
    q = field_spec.q
    columns = []
    for i in range(k):
        for j in range(k):
            if i == j:
                columns.append({i * k + i: q})
            elif i < j:
                columns.append({j * k + i: field_spec.one})
            else:
                col = {j * k + i: q}
                if q != 1:
                    col[i * k + j] = q - 1
                columns.append(col)
    r = Matrix.from_columns(field_spec, k * k, columns)
    return check_hecke_symmetry(k, field_spec, r, q, f"drinfeld_jimbo:{k}")


def super_symmetry(field_spec: FieldSpec, even: int, odd: int) -> HeckeSymmetry:
    """Суперсимметрия при q = 1: R(e_i⊗e_j) = (-1)^{p(i)p(j)} e_j⊗e_i"""
    d = even + odd
    if d < 1 or even < 0 or odd < 0:
        raise ValueError(f"super needs m, n >= 0 with m + n >= 1, got {even},{odd}")
    one = field_spec.one
    columns = []
    for i in range(d):
        for j in range(d):
            sign = -one if i >= even and j >= even else one
            columns.append({j * d + i: sign})
    r = Matrix.from_columns(field_spec, d * d, columns)
    return check_hecke_symmetry(d, field_spec, r, one, f"super:{even},{odd}")


def hietarinta_counterexample(field_spec: FieldSpec) -> HeckeSymmetry:
    """Симметрия на двумерном V при q² = -1 с h_S = h_Λ = 1 + 2t + 2t²"""
    q = field_spec.q
    if q * q != -1:
        raise InvalidFieldError(f"The counterexample needs q^2 = -1 (use the gauss field), got q = {q}")
    c = (q - 1) / 2
    grid = [[1, 0, 0, 1], [0, 1, -1, 0], [0, 1, 1, 0], [-1, 0, 0, 1]]
    r = Matrix.from_dense(field_spec, [[c * v for v in row] for row in grid])
    return check_hecke_symmetry(2, field_spec, r, q, "hietarinta_counterexample")


def one_dim(field_spec: FieldSpec) -> HeckeSymmetry:
    """dim V = 1, R = умножение на q"""
    return check_hecke_symmetry(1, field_spec, Matrix.scalar(field_spec, 1, field_spec.q), field_spec.q, "one_dim")


def _int_params(params: Sequence, count: int, name: str) -> List[int]:
    if len(params) != count:
        raise ValueError(f"{name} expects {count} integer parameter(s), got {list(params)}")
    try:
        return [int(p) for p in params]
    except (TypeError, ValueError):
        raise ValueError(f"{name} parameters must be integers, got {list(params)}")


def builtin_symmetry(name: str, params: Sequence, field_spec: FieldSpec) -> HeckeSymmetry:
    if name == "drinfeld_jimbo":
        return drinfeld_jimbo(field_spec, *_int_params(params, 1, name))
    if name == "super":
        return super_symmetry(field_spec, *_int_params(params, 2, name))
    if name == "hietarinta_counterexample":
        _int_params(params, 0, name)
        return hietarinta_counterexample(field_spec)
    if name == "one_dim":
        _int_params(params, 0, name)
        return one_dim(field_spec)
    raise ValueError(f"Unknown built-in symmetry {name!r}; expected one of {sorted(BUILTIN_NAMES)}")


BUILTIN_NAMES = ("drinfeld_jimbo", "super", "hietarinta_counterexample", "one_dim")


# --- Преобразования ---

@dataclass
class Transforms:
    tilde: HeckeSymmetry
    op: HeckeSymmetry
    star: HeckeSymmetry
    inverse: HeckeSymmetry


def tilde(sym: HeckeSymmetry) -> HeckeSymmetry:
    """R̃ = (q - 1)Id - R"""
    r = Matrix.scalar(sym.field, sym.d * sym.d, sym.q - 1) - sym.R
    return check_hecke_symmetry(sym.d, sym.field, r, sym.q, f"~{sym.label}")


def opposite(sym: HeckeSymmetry) -> HeckeSymmetry:
    tau = flip_matrix(sym.field, sym.d)
    return check_hecke_symmetry(sym.d, sym.field, tau @ sym.R @ tau, sym.q, f"op({sym.label})")


def star(sym: HeckeSymmetry) -> HeckeSymmetry:
    return check_hecke_symmetry(sym.d, sym.field, sym.R.transpose(), sym.q, f"{sym.label}*")


def inverse(sym: HeckeSymmetry) -> HeckeSymmetry:
    """R⁻¹ с параметром q⁻¹"""
    return check_hecke_symmetry(sym.d, sym.field, matrix_inverse(sym.R), sym.q.inverse(), f"{sym.label}^-1")


def transforms(sym: HeckeSymmetry) -> Transforms:
    return Transforms(tilde(sym), opposite(sym), star(sym), inverse(sym))


# --- Тензорные степени и алгебры ---

def tensor_representation(sym: HeckeSymmetry, n: int) -> ModuleRep:
    """T_n(V) с действием T_i -> R_i^{(n)}"""
    if n < 0:
        raise ValueError(f"Tensor power must be non-negative, got {n}")
    cached = sym._tensor.get(n)
    if cached is None:
        gens = [shifted_operator(sym.R, sym.d, n, i) for i in range(1, n)]
        cached = module_rep(n, sym.field, sym.q, gens, f"T_{n}({sym.label})", dim=sym.d ** n)
        sym._tensor[n] = cached
    return cached


def sym_relations(sym: HeckeSymmetry) -> QuadraticAlgebra:
    """S(V,R): соотношения Im(R - q·Id)"""
    shifted = sym.R - Matrix.scalar(sym.field, sym.d * sym.d, sym.q)
    return QuadraticAlgebra(sym.d, sym.field, image(shifted), f"S({sym.label})")


def ext_relations(sym: HeckeSymmetry) -> QuadraticAlgebra:
    """Λ(V,R): соотношения Ker(R - q·Id)"""
    shifted = sym.R - Matrix.scalar(sym.field, sym.d * sym.d, sym.q)
    return QuadraticAlgebra(sym.d, sym.field, kernel(shifted), f"L({sym.label})")


def _check_pair(sym_prime: HeckeSymmetry, sym: HeckeSymmetry) -> None:
    if sym_prime.q != sym.q or sym_prime.field.min_poly != sym.field.min_poly:
        raise HeckeMismatchError(f"Symmetries {sym_prime.label} and {sym.label} have different q or field")


def shuffle_permutation(d_prime: int, d: int, n: int) -> List[int]:
    """Номер в T_n(V'*⊗V) -> номер в T_n(V'*)⊗T_n(V) (V'* старший)"""
    size = d_prime * d
    right_size = d ** n
    perm = []
    for index in range(size ** n):
        f_index, v_index = 0, 0
        for k in range(n - 1, -1, -1):
            g = (index // size ** k) % size
            f_index = f_index * d_prime + g // d
            v_index = v_index * d + g % d
        perm.append(f_index * right_size + v_index)
    return perm


def permute_matrix(m: Matrix, perm: Sequence[int]) -> Matrix:
    """X'[a][b] = X[perm[a]][perm[b]]"""
    inv = [0] * len(perm)
    for a, p in enumerate(perm):
        inv[p] = a
    rows = [{inv[c]: value for c, value in m.rows[perm[a]].items()} for a in range(len(perm))]
    return Matrix(m.field, m.nrows, m.ncols, rows)


def homspace_operator(sym_prime: HeckeSymmetry, sym: HeckeSymmetry) -> Matrix:
    """Id⊗R - R'*⊗Id в координатах T_2(V'*⊗V)"""
    _check_pair(sym_prime, sym)
    split = (Matrix.identity(sym.field, sym_prime.d ** 2).kron(sym.R)
             - sym_prime.R.transpose().kron(Matrix.identity(sym.field, sym.d ** 2)))
    return permute_matrix(split, shuffle_permutation(sym_prime.d, sym.d, 2))


def homspace_relations(sym_prime: HeckeSymmetry, sym: HeckeSymmetry) -> Tuple[QuadraticAlgebra, QuadraticAlgebra]:
    """A(R',R) с соотношениями Im, E(R',R) с соотношениями Ker"""
    operator = homspace_operator(sym_prime, sym)
    generators = sym_prime.d * sym.d
    pair = f"{sym_prime.label},{sym.label}"
    a_alg = QuadraticAlgebra(generators, sym.field, image(operator), f"A({pair})")
    e_alg = QuadraticAlgebra(generators, sym.field, kernel(operator), f"E({pair})")
    return a_alg, e_alg


def algebra_by_name(name: str, sym: HeckeSymmetry, sym_prime: Optional[HeckeSymmetry] = None) -> QuadraticAlgebra:
    """S, L, A, E; завершающий '!' дает квадратичную двойственную"""
    dual = name.endswith("!")
    base = name[:-1] if dual else name
    if base == "S":
        alg = sym_relations(sym)
    elif base == "L":
        alg = ext_relations(sym)
    elif base in ("A", "E"):
        a_alg, e_alg = homspace_relations(sym_prime or sym, sym)
        alg = a_alg if base == "A" else e_alg
    else:
        raise ValueError(f"Unknown algebra {name!r}; expected S, L, A or E, optionally with '!'")
    return quadratic_dual(alg) if dual else alg


# --- Действие 𝒯 на T_n(V'*⊗V) ---

def calT_action(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, n: int) -> List[Matrix]:
    """𝒯_i = ((R'*)⁻¹)_i^{(n)} ⊗ R_i^{(n)}, переставленные в координаты T_n(V'*⊗V)"""
    _check_pair(sym_prime, sym)
    left = tensor_representation(star(inverse(sym_prime)), n)
    pair = tensor_module_pair(left, tensor_representation(sym, n))
    perm = shuffle_permutation(sym_prime.d, sym.d, n)
    return [permute_matrix(g, perm) for g in pair.gens]


def calR_matrix(sym_prime: HeckeSymmetry, sym: HeckeSymmetry) -> Matrix:
    """𝓡 = (R'*)⁻¹ ⊗ R на T_2(V'*⊗V)"""
    _check_pair(sym_prime, sym)
    split = matrix_inverse(sym_prime.R.transpose()).kron(sym.R)
    return permute_matrix(split, shuffle_permutation(sym_prime.d, sym.d, 2))


def calT_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, n: int) -> Dict[str, bool]:
    """
    Сверяет 𝒯_i, собранные из тензорных представлений (сопряжение
    a -> T_i a T_i⁻¹ в векторизованной форме), со сдвигами 𝓡 по T_n(V'*⊗V),
    а также Im(𝓡 - Id), Ker(𝓡 - Id) с соотношениями A(R',R), E(R',R).
    """
    size = sym_prime.d * sym.d
    calr = calR_matrix(sym_prime, sym)
    conjugation = calT_action(sym_prime, sym, n)
    shifted = [shifted_operator(calr, size, n, i) for i in range(1, n)]
    a_alg, e_alg = homspace_relations(sym_prime, sym)
    one = Matrix.identity(sym.field, size * size)
    result = {
        "conjugation": conjugation == shifted,
        "relations": image(calr - one) == a_alg.relations and kernel(calr - one) == e_alg.relations,
    }
    if not all(result.values()):
        logger.error(f"calT cross-check failed for ({sym_prime.label}, {sym.label}), n={n}: {result}")
    return result


def calT_exactness(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, n: int, kind: str) -> List[int]:
    """Гомологии K_•(T_n(V'*⊗V); (𝒯_i - 1)𝓜 или Ker(𝒯_i - 1))"""
    _check_pair(sym_prime, sym)
    left = tensor_representation(star(inverse(sym_prime)), n)
    return tensor_exactness(left, tensor_representation(sym, n), kind)


# --- Проверки ---

def transforms_check(sym: HeckeSymmetry, nmax: int) -> Dict[str, bool]:
    """Тождества для R̃, R^op, R*, R⁻¹ на уровне размерностей и подпространств"""
    t = transforms(sym)
    s_alg, l_alg = sym_relations(sym), ext_relations(sym)
    result = {
        "op_dims": component_dims(sym_relations(t.op), nmax) == component_dims(s_alg, nmax),
        "star_dims": component_dims(sym_relations(t.star), nmax) == component_dims(quadratic_dual(l_alg), nmax),
        "star_relations": sym_relations(t.star).relations == quadratic_dual(l_alg).relations,
        "tilde_inverse": t.tilde.R == matrix_inverse(sym.R).scale(-sym.q),
        "inverse_same": same_algebras_inverse(sym),
    }
    if sym.q != -1:
        result["tilde_relations"] = sym_relations(t.tilde).relations == l_alg.relations
    if not all(result.values()):
        logger.error(f"Transform identities fail for {sym.label}: {result}")
    return result


def same_algebras_inverse(sym: HeckeSymmetry) -> bool:
    """S(V,R⁻¹) = S(V,R) и Λ(V,R⁻¹) = Λ(V,R)"""
    inv = inverse(sym)
    return (sym_relations(inv).relations == sym_relations(sym).relations
            and ext_relations(inv).relations == ext_relations(sym).relations)


def swap_generators(space: Subspace, d_prime: int, d: int) -> Subspace:
    """Перенос соотношений с (V'⊗V*)^{⊗2} на (V*⊗V')^{⊗2}: (f, v) -> (v, f)"""
    size = d_prime * d
    swap = [(g % d) * d_prime + g // d for g in range(size)]
    rows = []
    for row in space.rows:
        rows.append({swap[c // size] * size + swap[c % size]: value for c, value in row.items()})
    return Subspace.span(space.field, space.ambient_dim, rows)


def dual_hom_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry) -> Dict[str, bool]:
    """A(R',R)^! = E(R,R') и E(R',R)^! = A(R,R') после перестановки порождающих"""
    a_alg, e_alg = homspace_relations(sym_prime, sym)
    a_back, e_back = homspace_relations(sym, sym_prime)
    result = {
        "a_dual_is_e": swap_generators(quadratic_dual(a_alg).relations, sym_prime.d, sym.d) == e_back.relations,
        "e_dual_is_a": swap_generators(quadratic_dual(e_alg).relations, sym_prime.d, sym.d) == a_back.relations,
    }
    if not all(result.values()):
        logger.error(f"Dual hom-space identities fail for ({sym_prime.label}, {sym.label}): {result}")
    return result


def tilde_identity_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry) -> Dict[str, bool]:
    """A(R',R) = E(R',R̃) и E(R',R) = A(R',R̃) при q ≠ -1"""
    if sym.q == -1:
        raise PreconditionError("The tilde identities need q != -1")
    a_alg, e_alg = homspace_relations(sym_prime, sym)
    a_tilde, e_tilde = homspace_relations(sym_prime, tilde(sym))
    return {
        "a_is_e_tilde": a_alg.relations == e_tilde.relations,
        "e_is_a_tilde": e_alg.relations == a_tilde.relations,
    }


@dataclass
class HomIdentification:
    """dim A_n(R',R) против dim Hom(T_n(V), T_n(V')) и dim Υ^{(n)}(E) против dim Hom(T_n(V'), T_n(V))"""
    n: int
    a_dim: int
    hom_dim: int
    upsilon_dim: int
    hom_back_dim: int

    @property
    def ok(self) -> bool:
        return self.a_dim == self.hom_dim and self.upsilon_dim == self.hom_back_dim

    def to_dict(self) -> dict:
        return {"n": self.n, "a_dim": self.a_dim, "hom_dim": self.hom_dim,
                "upsilon_dim": self.upsilon_dim, "hom_back_dim": self.hom_back_dim, "ok": self.ok}


def hom_identification_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, n: int) -> HomIdentification:
    a_alg, e_alg = homspace_relations(sym_prime, sym)
    tensor, tensor_prime = tensor_representation(sym, n), tensor_representation(sym_prime, n)
    report = HomIdentification(
        n=n,
        a_dim=component_dims(a_alg, n)[n],
        hom_dim=hom_space(tensor_prime, tensor).dim,
        upsilon_dim=upsilon(e_alg, n).dim,
        hom_back_dim=hom_space(tensor, tensor_prime).dim,
    )
    if not report.ok:
        logger.error(f"Hom identification fails for ({sym_prime.label}, {sym.label}), n={n}: {report}")
    return report


def _coordinates(space: Subspace, m: Matrix) -> Dict[int, Scalar]:
    """Координаты сплетающего оператора в RREF-базисе его Hom-пространства"""
    vector = {}
    for r, row in enumerate(m.rows):
        for c, value in row.items():
            vector[r * m.ncols + c] = value
    return {k: value for k, value in enumerate(space.coordinates(vector)) if value}


def _balanced_hom_dim(left_space: Subspace, left_basis: List[Matrix], algebra_basis: List[Matrix],
                      right_space: Subspace, right_basis: List[Matrix], field_spec: FieldSpec) -> int:
    """dim X ⊗_C Y для X = Hom(·, ·)·C, Y = C·Hom(·, ·) с композицией"""
    right_actions, left_actions = [], []
    for a in algebra_basis:
        right_actions.append(Matrix.from_columns(
            field_spec, len(left_basis), [_coordinates(left_space, x @ a) for x in left_basis]))
        left_actions.append(Matrix.from_columns(
            field_spec, len(right_basis), [_coordinates(right_space, a @ y) for y in right_basis]))
    return balanced_tensor_dim(len(left_basis), len(right_basis), right_actions, left_actions, field_spec)


@dataclass
class CotensorReport:
    n: int
    tensor_dim: int
    a_dim: int

    @property
    def ok(self) -> bool:
        return self.tensor_dim == self.a_dim

    def to_dict(self) -> dict:
        return {"n": self.n, "tensor_dim": self.tensor_dim, "a_dim": self.a_dim, "ok": self.ok}


def cotensor_dim_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, sym_second: HeckeSymmetry,
                       n: int) -> CotensorReport:
    """dim Hom(T_n, T'_n) ⊗_{End T_n} Hom(T''_n, T_n) против dim A_n(R',R'')"""
    _check_pair(sym_prime, sym)
    _check_pair(sym, sym_second)
    tensor = tensor_representation(sym, n)
    tensor_prime, tensor_second = tensor_representation(sym_prime, n), tensor_representation(sym_second, n)
    left_space = hom_space(tensor_prime, tensor)
    right_space = hom_space(tensor, tensor_second)
    end_space = hom_space(tensor, tensor)
    tensor_dim = _balanced_hom_dim(
        left_space, hom_basis(tensor_prime, tensor, left_space), hom_basis(tensor, tensor, end_space),
        right_space, hom_basis(tensor, tensor_second, right_space), sym.field)
    a_alg, _ = homspace_relations(sym_prime, sym_second)
    report = CotensorReport(n, tensor_dim, component_dims(a_alg, n)[n])
    logger.info(f"Cotensor check ({sym_prime.label}, {sym.label}, {sym_second.label}), n={n}: "
                f"{report.tensor_dim} vs {report.a_dim}")
    return report


@dataclass
class RestrictionReport:
    n: int
    m: int
    full_dim: int
    restricted_dim: int

    @property
    def ok(self) -> bool:
        return self.full_dim == self.restricted_dim

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "full_dim": self.full_dim,
                "restricted_dim": self.restricted_dim, "ok": self.ok}


def restriction_tensor_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, sym_second: HeckeSymmetry,
                             n: int, m: int) -> RestrictionReport:
    """
    Hom_A(X,Y) ⊗_{End_A X} M против Hom_B(X,Y) ⊗_{End_B X} M для
    A = H_n, B = H_{m,n-m}, X = T_n(V), Y = T_n(V'), M = Hom_B(T_n(V''), X).
    """
    if not 0 < m < n:
        raise ValueError(f"Parabolic split needs 0 < m < n, got m={m}, n={n}")
    _check_pair(sym_prime, sym)
    _check_pair(sym, sym_second)
    x_mod = tensor_representation(sym, n)
    y_mod, z_mod = tensor_representation(sym_prime, n), tensor_representation(sym_second, n)
    parabolic = [i for i in range(1, n) if i != m]
    module_space = hom_space(x_mod, z_mod, parabolic)
    module_basis = hom_basis(x_mod, z_mod, module_space)

    def balanced(generators):
        left_space = hom_space(y_mod, x_mod, generators)
        end_space = hom_space(x_mod, x_mod, generators)
        return _balanced_hom_dim(left_space, hom_basis(y_mod, x_mod, left_space),
                                 hom_basis(x_mod, x_mod, end_space), module_space, module_basis, sym.field)

    report = RestrictionReport(n, m, balanced(None), balanced(parabolic))
    if not report.ok:
        logger.warning(f"Restriction tensor dims differ for ({sym_prime.label}, {sym.label}, "
                       f"{sym_second.label}), n={n}, m={m}: {report}")
    return report


# --- Аннуляторы: y_k L_k ⊆ V L_{k-1} ---

def tensor_annihilator_check(sym: HeckeSymmetry, n: int, which: str = "L") -> Dict[int, bool]:
    """Включение с y_k = Σ (-1)^i q^{k-1-i} T_1···T_i, действующим на T_k(V)"""
    algebra = algebra_by_name(which, sym)

    def y_action(k: int) -> Matrix:
        if k == 1:
            return Matrix.identity(sym.field, sym.d)
        y = parabolic_alt_sum((1, k - 1), sym.field, sym.q)
        return hecke_act(y, tensor_representation(sym, k))

    return annihilator_inclusion_check(algebra, n, y_action)


def calT_alternating_sum(gens: Sequence[Matrix], size: int, field_spec: FieldSpec) -> Matrix:
    """Σ_i (-1)^i 𝒯_1···𝒯_i"""
    total = Matrix.identity(field_spec, size)
    word = Matrix.identity(field_spec, size)
    for i, g in enumerate(gens, start=1):
        word = word @ g
        total = total - word if i % 2 else total + word
    return total


def calT_annihilator_check(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, n: int, which: str = "E") -> Dict[int, bool]:
    """Включение y_k L_k ⊆ T_1 L_{k-1} для A(R',R) или E(R',R) с y_k из 𝒯"""
    a_alg, e_alg = homspace_relations(sym_prime, sym)
    algebra = e_alg if which == "E" else a_alg
    size = sym_prime.d * sym.d

    def y_action(k: int) -> Matrix:
        return calT_alternating_sum(calT_action(sym_prime, sym, k), size ** k, sym.field)

    return annihilator_inclusion_check(algebra, n, y_action)


# --- Фробениус и Горенштейн для пространств Hom ---

def top_frobenius(algebra: QuadraticAlgebra, nmax: int) -> Optional[FrobeniusReport]:
    """Фробениус в верхней ненулевой степени, если она не больше nmax"""
    dims = component_dims(algebra, nmax + 1)
    if dims[nmax + 1] != 0:
        logger.warning(f"{algebra.label}: no vanishing component up to degree {nmax + 1}")
        return None
    top = max(k for k, dim in enumerate(dims) if dim)
    return frobenius_check(algebra, top)


def gorenstein_report(sym_prime: HeckeSymmetry, sym: HeckeSymmetry, nmax: int) -> dict:
    """E(R',R) и E(R,R') фробениусовы; Koszul(A) + Frobenius(A^!) как признак Горенштейна"""
    a_alg, e_alg = homspace_relations(sym_prime, sym)
    _, e_back = homspace_relations(sym, sym_prime)
    result = {}
    for key, algebra in (("E", e_alg), ("E_back", e_back)):
        report = top_frobenius(algebra, nmax)
        result[key] = report.to_dict() if report else {"label": algebra.label, "status": "hypothesis-not-met"}
    dual_report = top_frobenius(quadratic_dual(a_alg), nmax)
    if dual_report is not None and nmax >= 2:
        result["gorenstein"] = gorenstein_certificate(koszul_exactness(a_alg, nmax), dual_report)
    return result


# --- Документ ---

def _coeff_list(value: Scalar) -> List[str]:
    coeffs = list(value.coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return [format_rational(c) for c in coeffs]


def symmetry_to_document(sym: HeckeSymmetry) -> dict:
    return {
        "field": {
            "min_poly": [format_rational(c) for c in sym.field.min_poly],
            "q": _coeff_list(sym.q),
        },
        "dim": sym.d,
        "basis": BASIS_CONVENTION,
        "label": sym.label,
        "matrix": [[_coeff_list(v) for v in row] for row in sym.R.to_dense()],
    }


def symmetry_from_document(doc: dict) -> HeckeSymmetry:
    """Разбор и проверка документа; SymmetryFileError с путем к полю"""
    if not isinstance(doc, dict):
        raise SymmetryFileError("Symmetry document must be an object")
    for key in ("field", "dim", "matrix"):
        if key not in doc:
            raise SymmetryFileError(f"Missing required key {key!r}", key)
    basis = doc.get("basis", BASIS_CONVENTION)
    if basis != BASIS_CONVENTION:
        raise SymmetryFileError(f"Unsupported basis convention {basis!r}; expected {BASIS_CONVENTION}", "basis")
    spec = doc["field"]
    if not isinstance(spec, dict) or "min_poly" not in spec or "q" not in spec:
        raise SymmetryFileError("field needs min_poly and q coefficient lists", "field")
    try:
        field_spec = field_make(spec["min_poly"], spec["q"])
    except (ValueError, TypeError) as e:
        raise SymmetryFileError(str(e), "field")
    d = doc["dim"]
    if not isinstance(d, int) or d < 1:
        raise SymmetryFileError(f"dim must be a positive integer, got {d!r}", "dim")
    grid = doc["matrix"]
    size = d * d
    if not isinstance(grid, list) or len(grid) != size:
        raise SymmetryFileError(f"matrix must have {size} rows", "matrix")
    rows = []
    for r, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != size:
            raise SymmetryFileError(f"row must have {size} entries", f"matrix[{r}]")
        parsed = []
        for c, entry in enumerate(row):
            try:
                parsed.append(parse_scalar(field_spec, entry))
            except (ValueError, TypeError) as e:
                raise SymmetryFileError(str(e), f"matrix[{r}][{c}]")
        rows.append(parsed)
    r_matrix = Matrix.from_dense(field_spec, rows)
    return check_hecke_symmetry(d, field_spec, r_matrix, field_spec.q, doc.get("label", ""))
