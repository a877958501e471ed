"""
Точная линейная алгебра над Scalar: канонические подпространства (RREF),
суммы, пересечения, ядра и образы, фактор-пространства и гомологии комплексов.

Векторы хранятся разреженно: dict {столбец: Scalar}, нули не хранятся.
Матрицы действуют на векторы-столбцы: y = M·x.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

from app.scalars import FieldSpec, Scalar

logger = logging.getLogger(__name__)

Vector = Dict[int, Scalar]


class AmbientMismatchError(ValueError):
    """Подпространства или матрицы разных размеров"""


class ComplexError(ValueError):
    """Построенный комплекс не удовлетворяет ∂∘∂ = 0"""


# --- Векторы ---

def vec_axpy(target: Vector, coef: Scalar, source: Vector) -> None:
    """target += coef·source (на месте)"""
    for col, value in source.items():
        current = target.get(col)
        updated = coef * value if current is None else current + coef * value
        if updated:
            target[col] = updated
        elif current is not None:
            del target[col]


def vec_scale(vector: Vector, coef: Scalar) -> Vector:
    if not coef:
        return {}
    return {col: coef * value for col, value in vector.items()}


def vec_clean(vector: Vector) -> Vector:
    return {col: value for col, value in vector.items() if value}


def unit_vector(field_spec: FieldSpec, index: int) -> Vector:
    return {index: field_spec.one}


# --- Матрицы ---

class Matrix:
    """Прямоугольная матрица с разреженными строками"""

    __slots__ = ("field", "nrows", "ncols", "rows", "_cols")

    def __init__(self, field_spec: FieldSpec, nrows: int, ncols: int, rows: Optional[List[Vector]] = None):
        self.field = field_spec
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [{} for _ in range(nrows)]
        self._cols = None

    @classmethod
    def zero(cls, field_spec: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        return cls(field_spec, nrows, ncols)

    @classmethod
    def identity(cls, field_spec: FieldSpec, n: int) -> "Matrix":
        return cls(field_spec, n, n, [{i: field_spec.one} for i in range(n)])

    @classmethod
    def scalar(cls, field_spec: FieldSpec, n: int, value: Scalar) -> "Matrix":
        if not value:
            return cls.zero(field_spec, n, n)
        return cls(field_spec, n, n, [{i: value} for i in range(n)])

    @classmethod
    def from_dense(cls, field_spec: FieldSpec, grid: Sequence[Sequence]) -> "Matrix":
        rows = []
        for line in grid:
            row = {}
            for col, value in enumerate(line):
                if not isinstance(value, Scalar):
                    value = field_spec.from_int(value)
                if value:
                    row[col] = value
            rows.append(row)
        ncols = len(grid[0]) if grid else 0
        return cls(field_spec, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field_spec: FieldSpec, nrows: int, columns: Sequence[Vector]) -> "Matrix":
        rows = [{} for _ in range(nrows)]
        for col, vector in enumerate(columns):
            for row, value in vector.items():
                if value:
                    rows[row][col] = value
        return cls(field_spec, nrows, len(columns), rows)

    def to_dense(self) -> List[List[Scalar]]:
        zero = self.field.zero
        return [[row.get(col, zero) for col in range(self.ncols)] for row in self.rows]

    def entry(self, row: int, col: int) -> Scalar:
        return self.rows[row].get(col, self.field.zero)

    @property
    def columns(self) -> List[Vector]:
        if self._cols is None:
            cols = [{} for _ in range(self.ncols)]
            for r, row in enumerate(self.rows):
                for c, value in row.items():
                    cols[c][r] = value
            self._cols = cols
        return self._cols

    def column(self, col: int) -> Vector:
        return self.columns[col]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, [dict(col) for col in self.columns])

    def apply(self, vector: Vector) -> Vector:
        """M·v"""
        result: Vector = {}
        cols = self.columns
        for col, value in vector.items():
            vec_axpy(result, value, cols[col])
        return result

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise AmbientMismatchError(f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        rows = []
        for row in self.rows:
            out: Vector = {}
            for k, value in row.items():
                vec_axpy(out, value, other.rows[k])
            rows.append(out)
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def _check_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise AmbientMismatchError(f"Shape mismatch: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        rows = []
        for mine, theirs in zip(self.rows, other.rows):
            out = dict(mine)
            vec_axpy(out, self.field.one, theirs)
            rows.append(out)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        rows = []
        minus_one = -self.field.one
        for mine, theirs in zip(self.rows, other.rows):
            out = dict(mine)
            vec_axpy(out, minus_one, theirs)
            rows.append(out)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, coef: Scalar) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [vec_scale(row, coef) for row in self.rows])

    def kron(self, other: "Matrix") -> "Matrix":
        """Кронекерово произведение self ⊗ other (индекс self старший)"""
        rows = []
        for row_a in self.rows:
            for row_b in other.rows:
                out = {}
                for ca, va in row_a.items():
                    base = ca * other.ncols
                    for cb, vb in row_b.items():
                        out[base + cb] = va * vb
                rows.append(out)
        return Matrix(self.field, self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def nonzero_entry(self):
        """Первая ненулевая позиция (для диагностики)"""
        for r, row in enumerate(self.rows):
            if row:
                c = min(row)
                return r, c, row[c]
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows)})"


# --- Исключение Гаусса ---

class _Echelon:
    """Инкрементальная приведенная ступенчатая форма"""

    def __init__(self, field_spec: FieldSpec, ncols: int):
        self.field = field_spec
        self.ncols = ncols
        self.pivot_rows: Dict[int, Vector] = {}

    def reduce(self, vector: Vector) -> Vector:
        v = dict(vector)
        # строки с ведущими элементами нулевые в чужих ведущих столбцах, хватает одного прохода
        for pivot in [c for c in v if c in self.pivot_rows]:
            coef = v.get(pivot)
            if coef:
                vec_axpy(v, -coef, self.pivot_rows[pivot])
        return v

    def insert(self, vector: Vector) -> bool:
        v = vec_clean(self.reduce(vector))
        if not v:
            return False
        pivot = min(v)
        inv = v[pivot].inverse()
        v = {c: value * inv for c, value in v.items()}
        for row in self.pivot_rows.values():
            coef = row.get(pivot)
            if coef:
                vec_axpy(row, -coef, v)
        self.pivot_rows[pivot] = v
        return True

    def to_subspace(self) -> "Subspace":
        pivots = tuple(sorted(self.pivot_rows))
        return Subspace(self.field, self.ncols, pivots, [self.pivot_rows[p] for p in pivots])


class Subspace:
    """Подпространство k^N, заданное строками в RREF"""

    __slots__ = ("field", "ambient_dim", "pivots", "rows", "_pivot_index")

    def __init__(self, field_spec: FieldSpec, ambient_dim: int, pivots: tuple, rows: List[Vector]):
        self.field = field_spec
        self.ambient_dim = ambient_dim
        self.pivots = pivots
        self.rows = rows
        self._pivot_index = None

    @classmethod
    def zero(cls, field_spec: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field_spec, ambient_dim, (), [])

    @classmethod
    def full(cls, field_spec: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field_spec, ambient_dim, tuple(range(ambient_dim)), [{i: field_spec.one} for i in range(ambient_dim)])

    @classmethod
    def span(cls, field_spec: FieldSpec, ambient_dim: int, vectors: Iterable[Vector]) -> "Subspace":
        echelon = _Echelon(field_spec, ambient_dim)
        for v in vectors:
            echelon.insert(v)
        return echelon.to_subspace()

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _echelon(self) -> _Echelon:
        echelon = _Echelon(self.field, self.ambient_dim)
        echelon.pivot_rows = {p: dict(row) for p, row in zip(self.pivots, self.rows)}
        return echelon

    def reduce(self, vector: Vector) -> Vector:
        """Остаток вектора по модулю подпространства (нули в ведущих столбцах)"""
        if self._pivot_index is None:
            self._pivot_index = dict(zip(self.pivots, self.rows))
        v = dict(vector)
        for pivot in [c for c in v if c in self._pivot_index]:
            coef = v.get(pivot)
            if coef:
                vec_axpy(v, -coef, self._pivot_index[pivot])
        return vec_clean(v)

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(row) for row in self.rows)

    def coordinates(self, vector: Vector) -> List[Scalar]:
        """Коэффициенты в базисе RREF (для векторов из подпространства)"""
        zero = self.field.zero
        return [vector.get(p, zero) for p in self.pivots]

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient_dim, [dict(row) for row in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.pivots == other.pivots and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _check_ambient(u: Subspace, w: Subspace) -> None:
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatchError(f"Ambient dimensions differ: {u.ambient_dim} vs {w.ambient_dim}")


def rref(m: Matrix):
    """Каноническое пространство строк и ранг"""
    space = Subspace.span(m.field, m.ncols, m.rows)
    return space, space.dim


def rank(m: Matrix) -> int:
    return rref(m)[1]


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    echelon = u._echelon()
    for row in w.rows:
        echelon.insert(row)
    return echelon.to_subspace()


def sum_all(field_spec: FieldSpec, ambient_dim: int, spaces: Iterable[Subspace]) -> Subspace:
    echelon = _Echelon(field_spec, ambient_dim)
    for space in spaces:
        for row in space.rows:
            echelon.insert(row)
    return echelon.to_subspace()


def orthogonal_complement(u: Subspace) -> Subspace:
    """U^⊥ относительно стандартного спаривания координат"""
    pivot_set = set(u.pivots)
    vectors = []
    for free in range(u.ambient_dim):
        if free in pivot_set:
            continue
        v = {free: u.field.one}
        for pivot, row in zip(u.pivots, u.rows):
            value = row.get(free)
            if value:
                v[pivot] = -value
        vectors.append(v)
    return Subspace.span(u.field, u.ambient_dim, vectors)


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    """U ∩ W = (U^⊥ + W^⊥)^⊥"""
    _check_ambient(u, w)
    if u.is_full():
        return w
    if w.is_full():
        return u
    return orthogonal_complement(subspace_sum(orthogonal_complement(u), orthogonal_complement(w)))


def intersect_all(field_spec: FieldSpec, ambient_dim: int, spaces: Sequence[Subspace]) -> Subspace:
    if not spaces:
        return Subspace.full(field_spec, ambient_dim)
    complements = sum_all(field_spec, ambient_dim, (orthogonal_complement(s) for s in spaces))
    return orthogonal_complement(complements)


def kernel(m: Matrix) -> Subspace:
    """{x : M·x = 0}"""
    return orthogonal_complement(rref(m)[0])


def image(m: Matrix) -> Subspace:
    """Пространство столбцов"""
    return Subspace.span(m.field, m.nrows, m.columns)


def preimage(m: Matrix, target: Subspace) -> Subspace:
    """{v : M·v ∈ W}"""
    if target.ambient_dim != m.nrows:
        raise AmbientMismatchError(f"Target ambient {target.ambient_dim} does not match {m.nrows} rows")
    functionals = orthogonal_complement(target).basis_matrix()
    if functionals.nrows == 0:
        return Subspace.full(m.field, m.ncols)
    return kernel(functionals @ m)


def apply_to_subspace(m: Matrix, u: Subspace) -> Subspace:
    """M(U)"""
    return Subspace.span(m.field, m.nrows, (m.apply(row) for row in u.rows))


def maps_into(m: Matrix, source: Subspace, target: Subspace) -> bool:
    return all(target.contains(m.apply(row)) for row in source.rows)


# --- Фактор-пространства ---

class QuotientMap:
    """
    Реализация Y/Z (Z ⊆ Y) по правилу дополнения ведущих столбцов: вектор
    приводится по модулю Z, остаются координаты вне ведущих столбцов Z, а в
    полученном пространстве берется RREF-базис образа Y.
    """

    def __init__(self, upper: Subspace, lower: Subspace):
        _check_ambient(upper, lower)
        self.field = upper.field
        self.upper = upper
        self.lower = lower
        lower_pivots = set(lower.pivots)
        self.free_columns = [c for c in range(upper.ambient_dim) if c not in lower_pivots]
        self._compress = {c: k for k, c in enumerate(self.free_columns)}
        self._full = upper.is_full()
        if self._full:
            self.image = None
            self.dim = len(self.free_columns)
        else:
            self.image = Subspace.span(self.field, len(self.free_columns),
                                       (self.compress(lower.reduce(row)) for row in upper.rows))
            self.dim = self.image.dim

    def compress(self, vector: Vector) -> Vector:
        return {self._compress[c]: value for c, value in vector.items()}

    def decompress(self, vector: Vector) -> Vector:
        return {self.free_columns[k]: value for k, value in vector.items()}

    def coords(self, vector: Vector) -> Vector:
        """Координаты класса v + Z (v ∈ Y) в базисе фактора"""
        reduced = self.compress(self.lower.reduce(vector))
        if self._full:
            return reduced
        index = {p: k for k, p in enumerate(self.image.pivots)}
        return {index[p]: value for p, value in reduced.items() if p in index}

    def lift(self, index: int) -> Vector:
        """Представитель базисного элемента фактора в Y"""
        if self._full:
            return {self.free_columns[index]: self.field.one}
        return self.decompress(self.image.rows[index])


def induced_map(source: QuotientMap, target: QuotientMap, m: Optional[Matrix] = None) -> Matrix:
    """Матрица отображения source → target, индуцированного M (или вложением, если M не задана)"""
    columns = []
    for j in range(source.dim):
        lifted = source.lift(j)
        if m is not None:
            lifted = m.apply(lifted)
        columns.append(target.coords(lifted))
    return Matrix.from_columns(source.field, target.dim, columns)


# --- Комплексы ---

@dataclass
class ChainComplex:
    """0 → K_n → ... → K_0 → 0; diffs[i]: K_i → K_{i-1}"""
    field: FieldSpec
    spaces: List[int]
    diffs: Dict[int, Matrix]
    quotients: List[QuotientMap] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.spaces) - 1


def quotient_complex(field_spec: FieldSpec, ambient_dim: int, subspaces: Sequence[Subspace]) -> ChainComplex:
    """K_i = Υ_i/(Υ_i ∩ Σ_i), Υ_i = ∩_{j<i} U_j, Σ_i = Σ_{j>i} U_j"""
    for u in subspaces:
        if u.ambient_dim != ambient_dim:
            raise AmbientMismatchError(f"Subspace ambient {u.ambient_dim} differs from {ambient_dim}")
    n = len(subspaces) + 1
    full = Subspace.full(field_spec, ambient_dim)
    complements = [orthogonal_complement(u) for u in subspaces]

    # Υ_0 = Υ_1 = M, дальше пересечения накапливаются слева
    upsilon_perp = [Subspace.zero(field_spec, ambient_dim), Subspace.zero(field_spec, ambient_dim)]
    for i in range(2, n + 1):
        upsilon_perp.append(subspace_sum(upsilon_perp[-1], complements[i - 2]))
    # Σ_{n-1} = Σ_n = 0, суммы накапливаются справа
    sigma = [None] * (n + 1)
    sigma[n] = Subspace.zero(field_spec, ambient_dim)
    sigma[n - 1] = Subspace.zero(field_spec, ambient_dim)
    for i in range(n - 2, -1, -1):
        sigma[i] = subspace_sum(sigma[i + 1], subspaces[i])

    quotients = []
    for i in range(n + 1):
        upsilon = full if upsilon_perp[i].dim == 0 else orthogonal_complement(upsilon_perp[i])
        if sigma[i].dim == 0:
            lower = sigma[i]
        elif upsilon.is_full():
            lower = sigma[i]
        else:
            lower = orthogonal_complement(subspace_sum(upsilon_perp[i], orthogonal_complement(sigma[i])))
        quotients.append(QuotientMap(upsilon, lower))

    diffs = {i: induced_map(quotients[i], quotients[i - 1]) for i in range(1, n + 1)}
    for i in range(2, n + 1):
        composite = diffs[i - 1] @ diffs[i]
        if not composite.is_zero():
            logger.error(f"d_{i - 1} d_{i} != 0 in quotient complex (ambient {ambient_dim})")
            raise ComplexError(f"Composite differential d_{i - 1}d_{i} is nonzero at {composite.nonzero_entry()}")
    dims = [q.dim for q in quotients]
    logger.debug(f"Quotient complex over ambient {ambient_dim}: dims K_0..K_{n} = {dims}")
    return ChainComplex(field_spec, dims, diffs, quotients)


def homology_dims(c: ChainComplex) -> List[int]:
    """dim H_i = dim ker ∂_i − rank ∂_{i+1}"""
    ranks = {i: rank(m) for i, m in c.diffs.items()}
    result = []
    for i, dim in enumerate(c.spaces):
        result.append(dim - ranks.get(i, 0) - ranks.get(i + 1, 0))
    return result


def balanced_tensor_dim(dim_x: int, dim_y: int, right_actions: Sequence[Matrix],
                        left_actions: Sequence[Matrix], field_spec: FieldSpec) -> int:
    """
    dim X ⊗_C Y: X ⊗ Y по модулю (x·a) ⊗ y − x ⊗ (a·y) для базисных a из C.
    Столбец i матрицы right_actions[k]: координаты x_i·a_k, столбец j
    матрицы left_actions[k]: координаты a_k·y_j.
    """
    relations = []
    minus_one = -field_spec.one
    for right, left in zip(right_actions, left_actions):
        right_cols, left_cols = right.columns, left.columns
        for i in range(dim_x):
            for j in range(dim_y):
                v: Vector = {}
                for i2, value in right_cols[i].items():
                    vec_axpy(v, value, {i2 * dim_y + j: field_spec.one})
                for j2, value in left_cols[j].items():
                    vec_axpy(v, minus_one * value, {i * dim_y + j2: field_spec.one})
                if v:
                    relations.append(v)
    return dim_x * dim_y - Subspace.span(field_spec, dim_x * dim_y, relations).dim


def matrix_inverse(m: Matrix) -> Matrix:
    """M⁻¹ по RREF расширенной матрицы [M | I]"""
    if m.nrows != m.ncols:
        raise AmbientMismatchError(f"Only square matrices are invertible, got {m.nrows}x{m.ncols}")
    n = m.nrows
    augmented = []
    for r, row in enumerate(m.rows):
        v = dict(row)
        v[n + r] = m.field.one
        augmented.append(v)
    space = Subspace.span(m.field, 2 * n, augmented)
    if space.pivots != tuple(range(n)):
        raise ZeroDivisionError(f"Matrix {m!r} is singular (rank {sum(1 for p in space.pivots if p < n)})")
    return Matrix(m.field, n, n, [{c - n: value for c, value in row.items() if c >= n} for row in space.rows])
