"""
Квадратичные алгебры A = T(V)/(U): размерности компонент, Υ^{(n)},
комплексы Кошуля, квадратичная двойственность, ряды Гильберта,
левые аннуляторы L_k и спаривания Фробениуса.

Базис T_n(V) лексикографический: e_{a_1}⊗...⊗e_{a_n} имеет номер
Σ a_k d^{n-k}. Компонента A_n реализуется дополнением ведущих столбцов I_n.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from app.scalars import FieldSpec
from app.linalg import (
    AmbientMismatchError, Matrix, QuotientMap, Subspace, Vector,
    homology_dims, maps_into, orthogonal_complement, quotient_complex, rank, subspace_sum,
)

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class QuadraticAlgebra:
    """T(V)/(U), U ⊆ V⊗V задано каноническим базисом"""
    d: int
    field: FieldSpec
    relations: Subspace
    label: str = ""

    def __post_init__(self):
        if self.relations.ambient_dim != self.d * self.d:
            raise AmbientMismatchError(
                f"Relations live in dimension {self.relations.ambient_dim}, expected d^2 = {self.d * self.d}")
        self._ideal: Dict[int, Subspace] = {}
        self._dual: Optional["QuadraticAlgebra"] = None

    def describe(self) -> dict:
        return {"label": self.label, "generators": self.d, "relations": self.relations.dim}


def quadratic_algebra(d: int, field_spec: FieldSpec, relations: Subspace, label: str = "") -> QuadraticAlgebra:
    return QuadraticAlgebra(d, field_spec, relations, label)


def tensor_vectors(u: Vector, v: Vector, right_dim: int) -> Vector:
    """u ⊗ v, если второй множитель лежит в пространстве размерности right_dim"""
    out: Vector = {}
    for a, x in u.items():
        base = a * right_dim
        for b, y in v.items():
            out[base + b] = x * y
    return out


# --- Идеал и компоненты ---

def shifted_relations(q: QuadraticAlgebra, n: int, i: int) -> Subspace:
    """U_i^{(n)} = V^{⊗(i-1)} ⊗ U ⊗ V^{⊗(n-i-1)}"""
    if n < 2 or not 1 <= i <= n - 1:
        raise ValueError(f"Shifted relations need n >= 2 and 1 <= i <= n-1, got n={n}, i={i}")
    d = q.d
    left_count, right_dim = d ** (i - 1), d ** (n - i - 1)
    block = d * d * right_dim
    # слои (a, b) не пересекаются по столбцам, поэтому RREF сохраняется
    pairs = []
    for a in range(left_count):
        for pivot, row in zip(q.relations.pivots, q.relations.rows):
            for b in range(right_dim):
                shifted = {a * block + c * right_dim + b: value for c, value in row.items()}
                pairs.append((a * block + pivot * right_dim + b, shifted))
    pairs.sort(key=lambda pair: pair[0])
    return Subspace(q.field, d ** n, tuple(p for p, _ in pairs), [row for _, row in pairs])


def _tensor_right(space: Subspace, d: int) -> Subspace:
    """W ⊗ V; ведущий столбец p переходит в p·d + b"""
    pivots, rows = [], []
    for pivot, row in zip(space.pivots, space.rows):
        for b in range(d):
            pivots.append(pivot * d + b)
            rows.append({c * d + b: value for c, value in row.items()})
    return Subspace(space.field, space.ambient_dim * d, tuple(pivots), rows)


def ideal_component(q: QuadraticAlgebra, n: int) -> Subspace:
    """I_n = Σ_i U_i^{(n)} = (I_{n-1} ⊗ V) + U_{n-1}^{(n)}"""
    if n < 0:
        raise ValueError(f"Degree must be non-negative, got {n}")
    cached = q._ideal.get(n)
    if cached is not None:
        return cached
    if n < 2:
        result = Subspace.zero(q.field, q.d ** n)
    elif n == 2:
        result = q.relations
    else:
        result = subspace_sum(_tensor_right(ideal_component(q, n - 1), q.d), shifted_relations(q, n, n - 1))
    logger.debug(f"{q.label or 'algebra'}: dim I_{n} = {result.dim} of {q.d ** n}")
    q._ideal[n] = result
    return result


def component_dims(q: QuadraticAlgebra, nmax: int) -> List[int]:
    """dim A_n = d^n - dim I_n для n ≤ nmax"""
    if nmax < 0:
        raise ValueError(f"Degree bound must be non-negative, got {nmax}")
    dims = [q.d ** n - ideal_component(q, n).dim for n in range(nmax + 1)]
    logger.info(f"{q.label or 'algebra'}: dims through degree {nmax} = {dims}")
    return dims


def quadratic_dual(q: QuadraticAlgebra) -> QuadraticAlgebra:
    """A^! с соотношениями U^⊥"""
    if q._dual is None:
        label = q.label[:-1] if q.label.endswith("!") else (f"{q.label}!" if q.label else "")
        dual = QuadraticAlgebra(q.d, q.field, orthogonal_complement(q.relations), label)
        dual._dual = q
        q._dual = dual
    return q._dual


def upsilon(q: QuadraticAlgebra, n: int) -> Subspace:
    """Υ^{(n)} = ∩_i U_i^{(n)} = (I_n(A^!))^⊥"""
    if n < 0:
        raise ValueError(f"Degree must be non-negative, got {n}")
    if n < 2:
        return Subspace.full(q.field, q.d ** n)
    return orthogonal_complement(ideal_component(quadratic_dual(q), n))


def component_quotient(q: QuadraticAlgebra, n: int) -> QuotientMap:
    """A_n = T_n / I_n"""
    return QuotientMap(Subspace.full(q.field, q.d ** n), ideal_component(q, n))


# --- Комплекс Кошуля ---

@dataclass
class GradedReport:
    """Размерности A_n, Υ^{(n)} и гомологии K^{(n)} для n ≤ nmax"""
    label: str
    nmax: int
    dims: List[int]
    upsilon_dims: List[int]
    homology: Dict[int, List[int]] = field(default_factory=dict)

    @property
    def koszul_through(self) -> int:
        """Наибольшее N' ≤ nmax, до которого все комплексы точны"""
        reached = 1
        for n in range(2, self.nmax + 1):
            if any(self.homology.get(n, [1])):
                break
            reached = n
        return reached

    @property
    def exact(self) -> bool:
        return self.koszul_through == self.nmax

    def failing_degrees(self) -> List[int]:
        return [n for n, dims in sorted(self.homology.items()) if any(dims)]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "nmax": self.nmax,
            "dims": self.dims,
            "upsilon_dims": self.upsilon_dims,
            "homology": {str(n): dims for n, dims in sorted(self.homology.items())},
            "koszul_through": self.koszul_through,
        }


def koszul_complex_homology(q: QuadraticAlgebra, n: int) -> List[int]:
    """Гомологии K_•(T_n; U_1^{(n)}, ..., U_{n-1}^{(n)})"""
    if n < 2:
        raise ValueError(f"Koszul complexes start at degree 2, got {n}")
    subspaces = [shifted_relations(q, n, i) for i in range(1, n)]
    dims = homology_dims(quotient_complex(q.field, q.d ** n, subspaces))
    logger.debug(f"{q.label or 'algebra'}: homology of K^({n}) = {dims}")
    return dims


def koszul_exactness(q: QuadraticAlgebra, nmax: int) -> GradedReport:
    if nmax < 2:
        raise ValueError(f"Koszul exactness needs nmax >= 2, got {nmax}")
    dims = component_dims(q, nmax)
    upsilon_dims = [upsilon(q, n).dim for n in range(nmax + 1)]
    homology = {n: koszul_complex_homology(q, n) for n in range(2, nmax + 1)}
    report = GradedReport(q.label, nmax, dims, upsilon_dims, homology)
    if report.exact:
        logger.info(f"{q.label or 'algebra'}: Koszul through degree {nmax}")
    else:
        logger.warning(f"{q.label or 'algebra'}: Koszul complex not exact in degrees {report.failing_degrees()}")
    return report


def hilbert_convolution(a_dims: Sequence[int], b_dims: Sequence[int], nmax: int) -> List[int]:
    """Коэффициенты h_A(t)·h_B(-t) до степени nmax"""
    if len(a_dims) < nmax + 1 or len(b_dims) < nmax + 1:
        raise ValueError(f"Need at least {nmax + 1} coefficients, got {len(a_dims)} and {len(b_dims)}")
    return [sum((-1) ** i * b_dims[i] * a_dims[n - i] for i in range(n + 1)) for n in range(nmax + 1)]


def hilbert_duality_check(a_dims: Sequence[int], b_dims: Sequence[int], nmax: int) -> Tuple[bool, Optional[int]]:
    """h_A(t)·h_B(-t) = 1 до степени nmax; возвращает (итог, первая плохая степень)"""
    for n, value in enumerate(hilbert_convolution(a_dims, b_dims, nmax)):
        if value != (1 if n == 0 else 0):
            logger.warning(f"Hilbert series relation fails at degree {n}: coefficient {value}")
            return False, n
    return True, None


# --- Левые аннуляторы и спаривания ---

def left_annihilator_spaces(q: QuadraticAlgebra, n: int) -> List[Subspace]:
    """L_k = {a ∈ T_k : a ⊗ T_{n-k} ⊆ I_n}, k = 0..n-1"""
    if n < 1:
        raise ValueError(f"Left annihilators need n >= 1, got {n}")
    functionals = orthogonal_complement(ideal_component(q, n))
    result = []
    for k in range(n):
        right_dim = q.d ** (n - k)
        equations = []
        for row in functionals.rows:
            # f(a ⊗ e_b) = Σ_a a_idx · f[idx·D + b]
            by_b: Dict[int, Vector] = {}
            for index, value in row.items():
                by_b.setdefault(index % right_dim, {})[index // right_dim] = value
            equations.extend(by_b[b] for b in sorted(by_b))
        result.append(orthogonal_complement(Subspace.span(q.field, q.d ** k, equations)))
    return result


def multiplication_pairing(q: QuadraticAlgebra, k: int, n: int) -> Matrix:
    """
    Матрица A_k → Hom(A_{n-k}, A_n): строка i соответствует базису A_k,
    столбец j·dim A_n + c: координате c произведения с j-м базисным
    вектором A_{n-k}. При dim A_n = 1 это матрица спаривания.
    """
    if not 0 <= k <= n:
        raise ValueError(f"Pairing degree must satisfy 0 <= k <= n, got k={k}, n={n}")
    left, right, top = component_quotient(q, k), component_quotient(q, n - k), component_quotient(q, n)
    right_dim = q.d ** (n - k)
    right_lifts = [right.lift(j) for j in range(right.dim)]
    rows = []
    for i in range(left.dim):
        u = left.lift(i)
        row: Vector = {}
        for j, v in enumerate(right_lifts):
            for c, value in top.coords(tensor_vectors(u, v, right_dim)).items():
                row[j * top.dim + c] = value
        rows.append(row)
    return Matrix(q.field, left.dim, right.dim * top.dim, rows)


@dataclass
class FrobeniusReport:
    label: str
    n: int
    dims: List[int]
    hypothesis: bool
    ranks: Dict[int, int] = field(default_factory=dict)

    @property
    def frobenius(self) -> bool:
        if not self.hypothesis:
            return False
        return all(self.dims[k] == self.dims[self.n - k] == r for k, r in self.ranks.items())

    @property
    def status(self) -> str:
        if not self.hypothesis:
            return "hypothesis-not-met"
        return "pass" if self.frobenius else "fail"

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "dims": self.dims,
            "hypothesis": self.hypothesis,
            "ranks": {str(k): r for k, r in sorted(self.ranks.items())},
            "status": self.status,
        }


def frobenius_check(q: QuadraticAlgebra, n: int) -> FrobeniusReport:
    """dim A_n = 1, A_{n+1} = 0 и невырожденность спариваний A_k × A_{n-k} → A_n"""
    dims = component_dims(q, n + 1)
    if dims[n] != 1 or dims[n + 1] != 0:
        logger.warning(f"{q.label or 'algebra'}: top-degree hypothesis fails at n={n} "
                       f"(dim A_n = {dims[n]}, dim A_(n+1) = {dims[n + 1]})")
        return FrobeniusReport(q.label, n, dims, False)
    ranks = {k: rank(multiplication_pairing(q, k, n)) for k in range(n + 1)}
    report = FrobeniusReport(q.label, n, dims, True, ranks)
    if not report.frobenius:
        logger.error(f"{q.label or 'algebra'}: degenerate pairing at n={n}, ranks {ranks}, dims {dims}")
    return report


def left_kernel_check(q: QuadraticAlgebra, n: int) -> Dict[int, Tuple[int, int]]:
    """Для k < n: (dim левого ядра умножения A_k × A_{n-k} → A_n, dim L_k - dim I_k)"""
    annihilators = left_annihilator_spaces(q, n)
    result = {}
    for k in range(n):
        pairing = multiplication_pairing(q, k, n)
        result[k] = (pairing.nrows - rank(pairing), annihilators[k].dim - ideal_component(q, k).dim)
    mismatched = [k for k, (a, b) in result.items() if a != b]
    if mismatched:
        logger.error(f"{q.label or 'algebra'}: left kernels differ from L_k/I_k at k={mismatched}")
    return result


def tensor_left(space: Subspace, d: int) -> Subspace:
    """V ⊗ W; ведущий столбец p переходит в a·D + p"""
    size = space.ambient_dim
    pivots, rows = [], []
    for a in range(d):
        for pivot, row in zip(space.pivots, space.rows):
            pivots.append(a * size + pivot)
            rows.append({a * size + c: value for c, value in row.items()})
    return Subspace(space.field, size * d, tuple(pivots), rows)


def annihilator_inclusion_check(q: QuadraticAlgebra, n: int, y_action: Callable[[int], Matrix]) -> Dict[int, bool]:
    """y_k·L_k ⊆ V ⊗ L_{k-1} для 0 < k < n; y_action(k) дает матрицу на T_k"""
    annihilators = left_annihilator_spaces(q, n)
    result = {}
    for k in range(1, n):
        target = tensor_left(annihilators[k - 1], q.d)
        result[k] = maps_into(y_action(k), annihilators[k], target)
        logger.debug(f"{q.label or 'algebra'}: n={n}, k={k}, dim L_k = {annihilators[k].dim}, inclusion {result[k]}")
    return result


def gorenstein_certificate(koszul: GradedReport, dual_frobenius: FrobeniusReport) -> dict:
    """Косвенный признак Горенштейна: Frobenius(A^!) и Koszul(A) до N"""
    return {
        "algebra": koszul.label,
        "koszul_through": koszul.koszul_through,
        "dual_frobenius": dual_frobenius.frobenius,
        "dual_top_degree": dual_frobenius.n,
        "indicated": koszul.exact and dual_frobenius.frobenius,
    }
