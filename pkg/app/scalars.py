import re
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.densearith import dup_add, dup_sub, dup_mul, dup_rem
from sympy.polys.densebasic import dup_strip, dup_degree
from sympy.polys.euclidtools import dup_gcdex

logger = logging.getLogger(__name__)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class InvalidFieldError(ValueError):
    """Минимальный многочлен не задает поле вида Q[x]/(m)"""


class ZeroDivisorError(ZeroDivisionError):
    """Делитель необратим: общий множитель с минимальным многочленом"""

    def __init__(self, message: str, factor: Sequence = ()):
        super().__init__(message)
        self.factor = tuple(factor)


class ScalarParseError(ValueError):
    """Ошибка разбора текстовой записи рационального числа или многочлена"""


# --- Рациональные числа ---

def parse_rational(text: str):
    """Разбирает запись вида "p/q" или "p" в элемент QQ"""
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise ScalarParseError(f"Invalid rational literal: {text!r}. Use p/q with decimal integers.")
    numer = int(match.group(1))
    denom = int(match.group(2)) if match.group(2) is not None else 1
    if denom == 0:
        raise ScalarParseError(f"Zero denominator in rational literal: {text!r}")
    return QQ(numer, denom)


def format_rational(value) -> str:
    """Каноническая запись p/q (знаменатель 1 опускается)"""
    value = QQ.convert(value)
    numer, denom = QQ.numer(value), QQ.denom(value)
    if denom == 1:
        return f"{numer}"
    return f"{numer}/{denom}"


def parse_poly(text: Union[str, Sequence]) -> Tuple:
    """Коэффициенты многочлена, начиная со свободного члена: "1,0,1" -> 1 + x^2"""
    if isinstance(text, str):
        parts = [p for p in text.split(",") if p.strip()]
    else:
        parts = list(text)
    if not parts:
        raise ScalarParseError("Empty polynomial coefficient list")
    return tuple(parse_rational(p) if isinstance(p, str) else QQ.convert(p) for p in parts)


def _to_dup(coeffs: Sequence) -> list:
    # sympy хранит старший коэффициент первым
    return dup_strip([QQ.convert(c) for c in reversed(coeffs)])


def _from_dup(poly: list, degree: int) -> Tuple:
    coeffs = list(reversed(poly))
    coeffs.extend([QQ.zero] * (degree - len(coeffs)))
    return tuple(coeffs[:degree])


# --- Поле и его элементы ---

@dataclass(frozen=True)
class FieldSpec:
    """Поле Q[x]/(m(x)) с выделенным параметром Гекке q"""
    min_poly: Tuple
    q_element: Tuple

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @property
    def modulus(self) -> list:
        return _to_dup(self.min_poly)

    @property
    def q(self) -> "Scalar":
        return Scalar(self, self.q_element)

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, (QQ.zero,) * self.degree)

    @property
    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, value) -> "Scalar":
        coeffs = [QQ.zero] * self.degree
        coeffs[0] = QQ.convert(value)
        return Scalar(self, tuple(coeffs))

    def from_poly(self, coeffs: Sequence) -> "Scalar":
        """Приводит многочлен по модулю m(x)"""
        reduced = dup_rem(_to_dup(coeffs), self.modulus, QQ)
        return Scalar(self, _from_dup(reduced, self.degree))

    def generator(self) -> "Scalar":
        return self.from_poly((QQ.zero, QQ.one))

    def with_q(self, q: "Scalar") -> "FieldSpec":
        return FieldSpec(self.min_poly, q.coeffs)

    def describe(self) -> dict:
        return {
            "min_poly": [format_rational(c) for c in self.min_poly],
            "q": [format_rational(c) for c in self.q_element],
        }

    def __repr__(self) -> str:
        return f"FieldSpec(min_poly={[format_rational(c) for c in self.min_poly]}, q={self.q})"


class Scalar:
    """Элемент Q[x]/(m(x)) в приведенной форме"""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field.min_poly != self.field.min_poly:
                raise InvalidFieldError("Cannot mix scalars from different fields")
            return other
        return self.field.from_int(other)

    def __add__(self, other) -> "Scalar":
        other = self._coerce(other)
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = self._coerce(other)
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "Scalar":
        return self._coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "Scalar":
        other = self._coerce(other)
        if self.field.degree == 1:
            return Scalar(self.field, (self.coeffs[0] * other.coeffs[0],))
        product = dup_mul(_to_dup(self.coeffs), _to_dup(other.coeffs), QQ)
        return Scalar(self.field, _from_dup(dup_rem(product, self.field.modulus, QQ), self.field.degree))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Обратный элемент через расширенный алгоритм Евклида"""
        if not self:
            raise ZeroDivisionError("Division by zero scalar")
        if self.field.degree == 1:
            return Scalar(self.field, (QQ.one / self.coeffs[0],))
        s, _t, h = dup_gcdex(_to_dup(self.coeffs), self.field.modulus, QQ)
        if dup_degree(h) > 0:
            factor = tuple(reversed(h))
            logger.error(f"Zero divisor {self} shares factor {[format_rational(c) for c in factor]} with min_poly")
            raise ZeroDivisorError(
                f"Scalar {self} is a zero divisor: gcd with min_poly is {[format_rational(c) for c in factor]}",
                factor,
            )
        return Scalar(self.field, _from_dup(dup_rem(s, self.field.modulus, QQ), self.field.degree))

    def __truediv__(self, other) -> "Scalar":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            # одинаковые коэффициенты в разных полях задают разные элементы
            same_field = other.field is self.field or other.field.min_poly == self.field.min_poly
            return same_field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field.from_int(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return format_scalar(self)


# --- Операции ---

def field_make(min_poly: Sequence, q_poly: Sequence) -> FieldSpec:
    """Строит каноническое поле Q[x]/(m) с параметром q"""
    coeffs = [QQ.convert(c) if not isinstance(c, str) else parse_rational(c) for c in min_poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise InvalidFieldError(f"min_poly must have degree >= 1, got {[format_rational(c) for c in coeffs]}")
    if coeffs[-1] != 1:
        raise InvalidFieldError(f"min_poly must be monic, leading coefficient is {format_rational(coeffs[-1])}")
    q_coeffs = [QQ.convert(c) if not isinstance(c, str) else parse_rational(c) for c in q_poly] or [QQ.zero]
    probe = FieldSpec(tuple(coeffs), (QQ.zero,) * (len(coeffs) - 1))
    q_reduced = probe.from_poly(q_coeffs)
    return FieldSpec(tuple(coeffs), q_reduced.coeffs)


def field_preset(name: str, q_text: str = None) -> FieldSpec:
    """Готовые поля: Q, gauss (q^2=-1), cyclo3 (1+q+q^2=0), zero (0-Гекке)"""
    presets = {
        "Q": ((0, 1), "2"),
        "gauss": ((1, 0, 1), "0,1"),
        "cyclo3": ((1, 1, 1), "0,1"),
        "zero": ((0, 1), "0"),
    }
    if name in presets:
        min_poly, default_q = presets[name]
    else:
        min_poly, default_q = parse_poly(name), "0,1"
    q_poly = parse_poly(q_text if q_text is not None else default_q)
    field = field_make(min_poly, q_poly)
    logger.debug(f"Field {name!r} built: {field}")
    return field


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Точная арифметика: add | sub | mul | div"""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unknown scalar operation: {op}")


def q_integer(field: FieldSpec, n: int, q: Scalar = None) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1)"""
    if n < 0:
        raise ValueError(f"q-integer needs n >= 0, got {n}")
    q = field.q if q is None else q
    total = field.zero
    power = field.one
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def format_scalar(value: Scalar) -> str:
    """Канонический текст: один рациональный коэффициент или список через запятую"""
    coeffs = list(value.coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return ",".join(format_rational(c) for c in coeffs)


def parse_scalar(field: FieldSpec, text: Union[str, Sequence]) -> Scalar:
    return field.from_poly(parse_poly(text))


def scalars_from_ints(field: FieldSpec, values: Iterable[int]) -> List[Scalar]:
    return [field.from_int(v) for v in values]
