"""Finite fields as towers of extensions, with arithmetic on integer encodings.

A field is described by a prime characteristic p and a (possibly empty) chain
of monic irreducible moduli.  Each modulus is a little-endian coefficient list
over the field one level below it, so ``Field(2, [(1, 1, 1)])`` is
F_4 = F_2[y]/(1 + y + y^2), and a further modulus on top of that builds an
extension of F_4.

Every element has one canonical encoding: an integer in [0, q) whose base-p
digits are the fully flattened coefficient vector, constant coefficient least
significant.  All arithmetic works directly on encodings; extensions of
modest order get full lookup tables, which keeps the exhaustive scans in the
oracle cheap.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import IntegrityError, UsageError

TABLE_LIMIT = 128  # largest extension order that gets eager op tables

_LEVEL_VARS = ("y", "z", "w", "u", "v")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(t: int, base: int, width: int) -> tuple[int, ...]:
    """Little-endian base digits of ``t``, zero-padded to ``width``."""
    out = []
    for _ in range(width):
        t, r = divmod(t, base)
        out.append(r)
    return tuple(out)


def _poly_str(coeffs: Sequence[int], var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(parts) if parts else "0"


class Field:
    """F_p or a tower extension; element values are encodings in [0, order)."""

    __slots__ = ("p", "moduli", "base", "top_degree", "order",
                 "_add_t", "_mul_t", "_neg_t", "_inv_t")

    def __init__(self, p: int, moduli: Sequence[Sequence[int]] = ()):
        p = int(p)
        if not _is_prime(p):
            raise UsageError(f"characteristic must be prime, got {p}")
        moduli = tuple(tuple(int(c) for c in m) for m in moduli)
        if moduli:
            base = Field(p, moduli[:-1])
            top = moduli[-1]
            if len(top) < 2:
                raise UsageError("a modulus must have degree at least 1")
            if any(not 0 <= c < base.order for c in top):
                raise UsageError("modulus coefficients must be encodings of the field below")
            if top[-1] != 1:
                raise UsageError("a modulus must be monic")
            if not is_irreducible(base, top):
                raise UsageError(f"modulus {list(top)} is reducible over the field below")
            self.base = base
            self.top_degree = len(top) - 1
            self.order = base.order ** self.top_degree
        else:
            self.base = None
            self.top_degree = 1
            self.order = p
        self.p = p
        self.moduli = moduli
        self._add_t = self._mul_t = self._neg_t = self._inv_t = None
        if self.base is not None and self.order <= TABLE_LIMIT:
            self._build_tables()

    # ------------------------------------------------------------------
    # encoding <-> coefficient vector over the immediate subfield

    def vector(self, a: int) -> tuple[int, ...]:
        """Digits of ``a`` over the immediate subfield, constant coefficient first."""
        if self.base is None:
            raise UsageError("prime-field elements have no coefficient vector")
        return _digits(a, self.base.order, self.top_degree)

    def unvector(self, digits: Sequence[int]) -> int:
        if self.base is None:
            raise UsageError("prime-field elements have no coefficient vector")
        s = self.base.order
        a = 0
        for d in reversed(digits):
            a = a * s + d
        return a

    # ------------------------------------------------------------------
    # arithmetic on encodings

    def add(self, a: int, b: int) -> int:
        t = self._add_t
        return t[a][b] if t is not None else self._add_slow(a, b)

    def neg(self, a: int) -> int:
        t = self._neg_t
        return t[a] if t is not None else self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        t = self._mul_t
        return t[a][b] if t is not None else self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self!r}")
        t = self._inv_t
        if t is not None:
            return t[a]
        if self.base is None:
            return pow(a, -1, self.p)
        return self.power(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        acc = 1
        while e:
            if e & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            e >>= 1
        return acc

    def frobenius(self, a: int, iterate: int = 1) -> int:
        """a^(s^iterate), s the order of the immediate subfield (s = p for F_p)."""
        if iterate < 0:
            raise UsageError("frobenius iterate must be nonnegative")
        s = self.base.order if self.base is not None else self.p
        for _ in range(iterate):
            a = self.power(a, s)
        return a

    def norm(self, a: int) -> int:
        """Product of all Frobenius conjugates over the immediate subfield.

        The result is fixed by Frobenius, so it is a subfield constant; it is
        returned as an encoding of the subfield (of the field itself for F_p,
        which is its own trivial degree-1 extension).
        """
        if self.base is None:
            return a
        acc = a
        x = a
        for _ in range(self.top_degree - 1):
            x = self.frobenius(x)
            acc = self.mul(acc, x)
        v = self.vector(acc)
        if any(v[1:]):
            raise IntegrityError("norm did not land in the subfield")
        return v[0]

    def _add_slow(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        B = self.base
        return self.unvector([B.add(x, y) for x, y in zip(self.vector(a), self.vector(b))])

    def _neg_slow(self, a: int) -> int:
        if self.base is None:
            return (-a) % self.p
        B = self.base
        return self.unvector([B.neg(x) for x in self.vector(a)])

    def _mul_slow(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.p
        B = self.base
        k = self.top_degree
        va, vb = self.vector(a), self.vector(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(va):
            if x == 0:
                continue
            for j, y in enumerate(vb):
                if y:
                    prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        top = self.moduli[-1]
        for i in range(len(prod) - 1, k - 1, -1):
            t = prod[i]
            if t:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = B.sub(prod[i - k + j], B.mul(t, top[j]))
        return self.unvector(prod[:k])

    def _build_tables(self) -> None:
        q = self.order
        self._add_t = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._neg_t = [self._neg_slow(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._mul_t[a].index(1)
        self._inv_t = inv

    # ------------------------------------------------------------------
    # elements and construction helpers

    def element(self, value: int) -> "FieldElement":
        value = int(value)
        if not 0 <= value < self.order:
            raise UsageError(f"encoding {value} is out of range for {self!r}")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.order))

    def extend(self, modulus: Sequence[int] | None = None, degree: int | None = None) -> "Field":
        """The extension of this field by ``modulus``, or by the canonical
        irreducible of ``degree`` when no modulus is given."""
        if modulus is None:
            if degree is None:
                raise UsageError("extend needs a modulus or a degree")
            modulus = find_irreducible(self, degree)
        return Field(self.p, self.moduli + (tuple(modulus),))

    def is_extension_of(self, other: "Field") -> bool:
        return self.p == other.p and self.moduli[:len(other.moduli)] == other.moduli

    def describe(self) -> str:
        if self.base is None:
            return f"F_{self.p}"
        var = _LEVEL_VARS[(len(self.moduli) - 1) % len(_LEVEL_VARS)]
        return f"{self.base.describe()}[{var}]/({_poly_str(self.moduli[-1], var)})"

    def to_json(self) -> dict:
        return {"p": self.p, "moduli": [list(m) for m in self.moduli]}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if not isinstance(obj, dict) or "p" not in obj:
            raise UsageError('a field descriptor is {"p": int, "moduli": [[...], ...]}')
        moduli = obj.get("moduli", [])
        if not isinstance(moduli, list) or not all(isinstance(m, list) for m in moduli):
            raise UsageError("field moduli must be a list of coefficient lists")
        return cls(obj["p"], moduli)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.p == other.p and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash((self.p, self.moduli))

    def __repr__(self) -> str:
        return f"GF({self.order})"


class FieldElement:
    """An element of a :class:`Field`, held as its canonical integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            if not 0 <= other < self.field.order:
                raise UsageError(f"encoding {other} is out of range for {self.field!r}")
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(v, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return 0 <= other < self.field.order and self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return str(self.value)

    def frobenius(self, iterate: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value, iterate))

    def norm(self) -> "FieldElement":
        target = self.field.base if self.field.base is not None else self.field
        return FieldElement(target, self.field.norm(self.value))

    def vector(self) -> tuple["FieldElement", ...]:
        base = self.field.base
        if base is None:
            raise UsageError("prime-field elements have no coefficient vector")
        return tuple(FieldElement(base, d) for d in self.field.vector(self.value))


# ----------------------------------------------------------------------
# polynomials over a field (little-endian encoding lists), used for moduli

def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_divmod(field: Field, num: Sequence[int], den: Sequence[int]):
    """Quotient and remainder of polynomials with encoded coefficients."""
    den = _poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _poly_trim(list(num))
    dn = len(den) - 1
    lead_inv = field.inv(den[-1])
    quo = [0] * max(len(rem) - dn, 0)
    while rem and len(rem) - 1 >= dn:
        shift = len(rem) - 1 - dn
        c = field.mul(rem[-1], lead_inv)
        quo[shift] = c
        for i, d in enumerate(den):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(c, d))
        _poly_trim(rem)
    return quo, rem


def is_irreducible(field: Field, poly: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree up to half of deg(poly)."""
    poly = list(poly)
    if not poly or poly[-1] != 1:
        raise UsageError("expected a monic polynomial")
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    q = field.order
    for d in range(1, k // 2 + 1):
        for t in range(q ** d):
            div = list(_digits(t, q, d)) + [1]
            _, rem = poly_divmod(field, poly, div)
            if not rem:
                return False
    return True


def find_irreducible(field: Field, degree: int) -> tuple[int, ...]:
    """Smallest monic irreducible of the given degree over ``field``.

    Candidates are ordered by reading the non-leading coefficients as base-q
    digits, constant term least significant, and scanning ascending; the
    result is a little-endian coefficient tuple including the leading 1.
    """
    if degree < 1:
        raise UsageError("degree must be at least 1")
    q = field.order
    for t in range(q ** degree):
        cand = _digits(t, q, degree) + (1,)
        if is_irreducible(field, cand):
            return cand
    raise IntegrityError("no irreducible polynomial found")  # unreachable
