"""
Exact sparse Laurent polynomials over the integers.

A ``Monomial`` is a tuple of ``(variable, exponent)`` pairs sorted by variable
index, with no zero exponents. A ``LaurentPoly`` maps monomials to nonzero
Python integers. Both are immutable; every operation returns a new value in
canonical form, so structural equality is polynomial equality.

Text format (used by the CLI and by test fixtures)::

    x1^2*x2 - 3*x3^-1 + 5

Terms are listed in graded lexicographic order, descending, with variables
ordered by index.
"""

from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.errors import DomainError, InexactDivisionError, ParseError

Pairs = Tuple[Tuple[int, int], ...]
PolyLike = Union["LaurentPoly", int]


class Monomial(tuple):
    """A Laurent monomial x_{i1}^{e1} x_{i2}^{e2} ... (no coefficient)."""

    __slots__ = ()

    def __new__(cls, pairs: Iterable[Tuple[int, int]] = ()):
        merged: Dict[int, int] = {}
        for var, exp in pairs:
            if var < 1:
                raise DomainError(f"Variable index must be positive, got x{var}")
            merged[var] = merged.get(var, 0) + exp
        return tuple.__new__(cls, sorted((v, e) for v, e in merged.items() if e != 0))

    @classmethod
    def _raw(cls, pairs: Pairs) -> "Monomial":
        """Wrap pairs that are already sorted and free of zero exponents."""
        return tuple.__new__(cls, pairs)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> "Monomial":
        """Build a monomial from a ``{variable: exponent}`` mapping."""
        return cls(exponents.items())

    @classmethod
    def from_vector(cls, vector: Iterable[int], start: int = 1) -> "Monomial":
        """Build x_start^v0 x_{start+1}^v1 ... from an exponent vector."""
        return cls((start + k, e) for k, e in enumerate(vector))

    @property
    def exponents(self) -> Dict[int, int]:
        return dict(self)

    def exponent(self, var: int) -> int:
        for v, e in self:
            if v == var:
                return e
        return 0

    def degree(self) -> int:
        return sum(e for _, e in self)

    def variables(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self)

    def is_one(self) -> bool:
        return len(self) == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other:
            return self
        if not self:
            return other
        out = []
        a, b = 0, 0
        while a < len(self) and b < len(other):
            va, ea = self[a]
            vb, eb = other[b]
            if va == vb:
                if ea + eb:
                    out.append((va, ea + eb))
                a += 1
                b += 1
            elif va < vb:
                out.append(self[a])
                a += 1
            else:
                out.append(other[b])
                b += 1
        out.extend(self[a:])
        out.extend(other[b:])
        return Monomial._raw(tuple(out))

    def inverse(self) -> "Monomial":
        return Monomial._raw(tuple((v, -e) for v, e in self))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __pow__(self, k: int) -> "Monomial":
        if k == 0:
            return ONE_MONOMIAL
        return Monomial._raw(tuple((v, e * k) for v, e in self))

    def shifted(self, offset: int) -> "Monomial":
        """Rename x_k to x_{k+offset}."""
        return Monomial((v + offset, e) for v, e in self)

    def split(self, var: int) -> Tuple[int, "Monomial"]:
        """Return ``(exponent of var, monomial with var removed)``."""
        rest = []
        exp = 0
        for v, e in self:
            if v == var:
                exp = e
            else:
                rest.append((v, e))
        return exp, Monomial._raw(tuple(rest))

    def with_factor(self, var: int, exp: int) -> "Monomial":
        """Multiply by x_var^exp."""
        if exp == 0:
            return self
        return self * Monomial._raw(((var, exp),))

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self)

    def __repr__(self) -> str:
        return f"Monomial({str(self)})"


ONE_MONOMIAL = Monomial._raw(())


def _grlex_key(mono: Monomial, nvars: int) -> Tuple[int, Tuple[int, ...]]:
    dense = [0] * nvars
    for v, e in mono:
        dense[v - 1] = e
    return mono.degree(), tuple(dense)


def _max_var(monos: Iterable[Monomial]) -> int:
    top = 0
    for m in monos:
        if m:
            top = max(top, m[-1][0])
    return top


class LaurentPoly:
    """Immutable integer Laurent polynomial in x1, x2, ..."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    mono = Monomial(mono)
                if coeff:
                    clean[mono] = clean.get(mono, 0) + int(coeff)
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, int]) -> "LaurentPoly":
        """Adopt a dict already in canonical form (no zero coefficients)."""
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._wrap({ONE_MONOMIAL: 1})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls._wrap({ONE_MONOMIAL: int(value)} if value else {})

    @classmethod
    def var(cls, index: int, exponent: int = 1) -> "LaurentPoly":
        return cls._wrap({Monomial(((index, exponent),)): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({mono: coeff} if coeff else {})

    @classmethod
    def coerce(cls, value: PolyLike) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"Cannot interpret {value!r} as a Laurent polynomial")

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        """True for c * x^a with a single term."""
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self._terms.get(ONE_MONOMIAL, 0)

    def variables(self) -> Tuple[int, ...]:
        seen = set()
        for mono in self._terms:
            seen.update(mono.variables())
        return tuple(sorted(seen))

    def max_variable(self) -> int:
        return _max_var(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise DomainError("The zero polynomial has no degree")
        return max(m.degree() for m in self._terms)

    def exponent_range(self, var: int) -> Tuple[int, int]:
        """Smallest and largest exponent of x_var over all terms."""
        exps = [m.exponent(var) for m in self._terms]
        if not exps:
            return 0, 0
        return min(exps), max(exps)

    def value_at_ones(self) -> int:
        """Evaluate at x_i = 1 for every i."""
        return sum(self._terms.values())

    def sorted_terms(self) -> Iterator[Tuple[Monomial, int]]:
        """Terms in canonical (graded lexicographic, descending) order."""
        nvars = _max_var(self._terms)
        for mono in sorted(self._terms, key=lambda m: _grlex_key(m, nvars), reverse=True):
            yield mono, self._terms[mono]

    def leading_term(self) -> Tuple[Monomial, int]:
        if not self._terms:
            raise DomainError("The zero polynomial has no leading term")
        nvars = _max_var(self._terms)
        mono = max(self._terms, key=lambda m: _grlex_key(m, nvars))
        return mono, self._terms[mono]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: PolyLike) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for mono, coeff in small.items():
            total = out.get(mono, 0) + coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: PolyLike) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                out[mono] = out.get(mono, 0) + c1 * c2
        return LaurentPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_monomial():
                (mono, coeff), = self._terms.items()
                if coeff in (1, -1):
                    return LaurentPoly.from_monomial(mono ** k, coeff ** (-k))
            raise DomainError(f"{self} is not invertible in the Laurent ring")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def times_monomial(self, mono: Monomial, coeff: int = 1) -> "LaurentPoly":
        if not coeff:
            return LaurentPoly.zero()
        return LaurentPoly._wrap({m * mono: c * coeff for m, c in self._terms.items()})

    def monomial_quotient(self, mono: Monomial) -> "LaurentPoly":
        """Divide every term by ``mono`` (always exact in the Laurent ring)."""
        return self.times_monomial(mono.inverse())

    def shift_variables(self, offset: int) -> "LaurentPoly":
        """Rename x_k to x_{k+offset}."""
        if offset == 0:
            return self
        return LaurentPoly._wrap({m.shifted(offset): c for m, c in self._terms.items()})

    def swap_variables(self, i: int, j: int) -> "LaurentPoly":
        """Exchange x_i and x_j."""
        swap = {i: j, j: i}
        return LaurentPoly._wrap({
            Monomial((swap.get(v, v), e) for v, e in m): c
            for m, c in self._terms.items()
        })

    def substitute(self, assignment: Mapping[int, PolyLike]) -> "LaurentPoly":
        """
        Apply the ring map x_k -> assignment[k]; unassigned variables are fixed.

        Raises:
            DomainError: If a variable with a negative exponent is sent to
                something other than a unit monomial
        """
        images = {v: LaurentPoly.coerce(p) for v, p in assignment.items()}
        powers: Dict[Tuple[int, int], LaurentPoly] = {}

        def power(var: int, exp: int) -> LaurentPoly:
            key = (var, exp)
            if key not in powers:
                image = images[var]
                if exp < 0 and not (image.is_monomial()
                                    and next(iter(image._terms.values())) in (1, -1)):
                    raise DomainError(
                        f"x{var} occurs with exponent {exp} but maps to {image}, "
                        f"which is not a unit monomial"
                    )
                powers[key] = image ** exp
            return powers[key]

        result: Dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            kept = []
            term = LaurentPoly.constant(coeff)
            for v, e in mono:
                if v in images:
                    term = term * power(v, e)
                else:
                    kept.append((v, e))
            if kept:
                term = term.times_monomial(Monomial._raw(tuple(kept)))
            for m, c in term._terms.items():
                result[m] = result.get(m, 0) + c
        return LaurentPoly._wrap({m: c for m, c in result.items() if c})

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __getstate__(self):
        return self._terms

    def __setstate__(self, state):
        self._terms = state
        self._hash = None

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (mono, coeff) in enumerate(self.sorted_terms()):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if mono.is_one():
                body = str(magnitude)
            elif magnitude == 1:
                body = str(mono)
            else:
                body = f"{magnitude}*{mono}"
            if k == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_terms(self) -> list:
        """JSON-friendly term list in canonical order."""
        return [
            {'coefficient': coeff, 'exponents': {f"x{v}": e for v, e in mono}}
            for mono, coeff in self.sorted_terms()
        ]


# -- module-level operations ----------------------------------------------

def var(index: int, exponent: int = 1) -> LaurentPoly:
    """The polynomial x_index^exponent."""
    return LaurentPoly.var(index, exponent)


def add(a: PolyLike, b: PolyLike) -> LaurentPoly:
    return LaurentPoly.coerce(a) + LaurentPoly.coerce(b)


def mul(a: PolyLike, b: PolyLike) -> LaurentPoly:
    return LaurentPoly.coerce(a) * LaurentPoly.coerce(b)


def substitute(p: LaurentPoly, assignment: Mapping[int, PolyLike]) -> LaurentPoly:
    return p.substitute(assignment)


def monomial_quotient(p: LaurentPoly, m: Monomial) -> LaurentPoly:
    return p.monomial_quotient(m)


def principal_specialization(p: LaurentPoly, q_var: int = 1) -> LaurentPoly:
    """Substitute x_i -> q^(i-1), with q rendered as x_{q_var}."""
    return p.substitute({
        v: LaurentPoly.var(q_var, v - 1) if v > 1 else LaurentPoly.one()
        for v in p.variables()
    })


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """
    Divide p by d, asserting that the division is exact.

    Leading-term division in graded lexicographic order. Candidate quotient
    monomials are confined to the exponent box allowed by p and d, which keeps
    the loop finite in the Laurent ring.

    Raises:
        ZeroDivisionError: If d is zero
        InexactDivisionError: If d does not divide p
    """
    if d.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    if d.is_monomial():
        (mono, coeff), = d.items()
        if any(c % coeff for _, c in p.items()):
            raise InexactDivisionError(f"{d} does not divide {p}")
        return LaurentPoly._wrap({m / mono: c // coeff for m, c in p.items()})

    variables = set(p.variables()) | set(d.variables())
    box = {}
    for v in variables:
        p_lo, p_hi = p.exponent_range(v)
        d_lo, d_hi = d.exponent_range(v)
        box[v] = (p_lo - d_hi, p_hi - d_lo)
    nvars = max(variables)
    lead_mono, lead_coeff = d.leading_term()

    remainder = dict(p.items())
    quotient: Dict[Monomial, int] = {}
    while remainder:
        mono = max(remainder, key=lambda m: _grlex_key(m, nvars))
        coeff = remainder[mono]
        if coeff % lead_coeff:
            raise InexactDivisionError(f"{d} does not divide {p}")
        q_mono = mono / lead_mono
        for v in variables:
            lo, hi = box[v]
            if not lo <= q_mono.exponent(v) <= hi:
                raise InexactDivisionError(f"{d} does not divide {p}")
        q_coeff = coeff // lead_coeff
        quotient[q_mono] = quotient.get(q_mono, 0) + q_coeff
        for m, c in d.items():
            key = m * q_mono
            total = remainder.get(key, 0) - c * q_coeff
            if total:
                remainder[key] = total
            else:
                remainder.pop(key, None)
    return LaurentPoly(quotient)


# -- parsing ----------------------------------------------------------------

def parse_poly(text: str) -> LaurentPoly:
    """
    Parse the canonical text format, e.g. ``"x1^2*x2 - 3*x3^-1 + 5"``.

    Raises:
        ParseError: With the offending character position
    """
    src = text
    pos = 0
    n = len(src)
    terms: Dict[Monomial, int] = {}

    def skip_ws():
        nonlocal pos
        while pos < n and src[pos].isspace():
            pos += 1

    def read_int() -> Optional[int]:
        nonlocal pos
        start = pos
        while pos < n and src[pos].isdigit():
            pos += 1
        return int(src[start:pos]) if pos > start else None

    skip_ws()
    if pos == n:
        raise ParseError("Empty polynomial", text, 0)
    first = True
    while True:
        skip_ws()
        sign = 1
        if pos < n and src[pos] in "+-":
            sign = -1 if src[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            raise ParseError("Expected '+' or '-'", text, pos)
        first = False
        term_start = pos
        coeff = read_int()
        skip_ws()
        pairs = []
        if coeff is not None and pos < n and src[pos] == "*":
            pos += 1
            skip_ws()
            if pos >= n or src[pos] != "x":
                raise ParseError("Expected a variable after '*'", text, pos)
        while pos < n and src[pos] == "x":
            pos += 1
            index = read_int()
            if index is None or index < 1:
                raise ParseError("Expected a positive variable index", text, pos)
            exp = 1
            skip_ws()
            if pos < n and src[pos] == "^":
                pos += 1
                neg = pos < n and src[pos] == "-"
                if neg:
                    pos += 1
                value = read_int()
                if value is None:
                    raise ParseError("Expected an exponent", text, pos)
                exp = -value if neg else value
            pairs.append((index, exp))
            skip_ws()
            if pos < n and src[pos] == "*":
                pos += 1
                skip_ws()
                if pos >= n or src[pos] != "x":
                    raise ParseError("Expected a variable after '*'", text, pos)
        if coeff is None and not pairs:
            raise ParseError("Expected a term", text, term_start)
        mono = Monomial(pairs)
        terms[mono] = terms.get(mono, 0) + sign * (1 if coeff is None else coeff)
        skip_ws()
        if pos >= n:
            break
    return LaurentPoly(terms)
