"""Exact base-field arithmetic: the rationals and prime fields F_p.

Scalars are plain Python values interpreted relative to a field object:
``Fraction`` for the rationals, ``int`` in ``[0, p)`` for F_p.  All
arithmetic goes through the field so the two representations never mix.
"""

from __future__ import annotations

from fractions import Fraction


class NotInvertibleError(ZeroDivisionError):
    """Raised when inverting 0, the only non-unit in a field."""


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for machine-word moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


class Field:
    """Common interface for the two supported base fields."""

    characteristic: int

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.invert(b))

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    # document encoding -----------------------------------------------------

    def scalar_to_doc(self, a):
        raise NotImplementedError

    def scalar_from_doc(self, value):
        raise NotImplementedError

    def spec_to_doc(self):
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers with arbitrary-precision arithmetic."""

    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if not a:
            raise NotInvertibleError("0 has no inverse")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return not a

    def scalar_to_doc(self, a):
        # canonical form: "a" for integers, "a/b" otherwise, denominator > 0
        return str(a)

    def scalar_from_doc(self, value):
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, int):
            return Fraction(value)
        raise ValueError(f"not a rational literal: {value!r}")

    def spec_to_doc(self):
        return "Q"

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """F_p with residues stored as ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not 2 <= p < 2**31:
            raise ValueError(f"prime {p} out of the supported machine-word range")
        self.p = p
        self.characteristic = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def invert(self, a):
        a %= self.p
        if a == 0:
            raise NotInvertibleError(f"0 has no inverse in F_{self.p}")
        g, s, _ = _xgcd(a, self.p)
        assert g == 1
        return s % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def scalar_to_doc(self, a):
        return a % self.p

    def scalar_from_doc(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"not an F_{self.p} residue: {value!r}")
        return value % self.p

    def spec_to_doc(self):
        return {"Fp": self.p}

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Cached prime-field constructor."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_doc(doc) -> Field:
    """Decode a field descriptor: "Q" or {"Fp": p}."""
    if doc == "Q":
        return QQ
    if isinstance(doc, dict) and set(doc) == {"Fp"}:
        return GF(doc["Fp"])
    raise ValueError(f"unrecognized field descriptor: {doc!r}")


def field_by_name(name: str) -> Field:
    """Decode the CLI spelling: "Q" or "F<p>" / "Fp:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise ValueError(f"unrecognized field name: {name!r}")


def field_name(field: Field) -> str:
    return "Q" if field.characteristic == 0 else f"F{field.characteristic}"
