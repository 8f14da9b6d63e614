"""Command-line front end: every top-level operation with JSON/plain output.

Polynomials are accepted either as text ("x^10-5*x^9+...", integer or
rational coefficients, '*' optional) or as JSON
{"terms": [["coef", "exp"], ...]} with decimal strings for arbitrary
precision.  Output is JSON by default; --plain renders human-readable
text.  Exit codes: 0 success, 1 no result exists (NONE), 2 usage or
domain errors (diagnostics as single-line JSON on stderr).
"""

from __future__ import annotations

import functools
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

import click

from . import ffield, lattice, qbinomial, qfactor, qsparse, sparsebound
from .polys import (
    QQ,
    DensePoly,
    PolynomialError,
    SparsePoly,
    sparse_height,
)

# ---------------------------------------------------------------------------
# Polynomial text <-> value


_TERM_RE = re.compile(
    r"([+-]?)((?:\d+(?:/\d+)?)?)(?:\*?(x)(?:\^(\d+))?)?"
)


def parse_poly_terms(text: str) -> List[Tuple[Fraction, int]]:
    """Parse the text grammar (or the JSON alternative) into (coef, exp) terms."""
    s = text.strip()
    terms: List[Tuple[Fraction, int]] = []
    if s.startswith("{"):
        data = json.loads(s)
        terms = [(Fraction(str(c)), int(str(e))) for c, e in data["terms"]]
        return _merge_terms(terms)
    s = s.replace(" ", "").replace("**", "^")
    if not s:
        raise PolynomialError("empty polynomial text")
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise PolynomialError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, xvar, exp = m.groups()
        if not num and not xvar:
            raise PolynomialError(f"cannot parse polynomial near {s[pos:]!r}")
        coef = Fraction(num) if num else Fraction(1)
        if sign == "-":
            coef = -coef
        e = (int(exp) if exp else 1) if xvar else 0
        terms.append((coef, e))
        pos = m.end()
    return _merge_terms(terms)


def _merge_terms(terms: List[Tuple[Fraction, int]]) -> List[Tuple[Fraction, int]]:
    merged: dict = {}
    for c, e in terms:
        merged[e] = merged.get(e, Fraction(0)) + c
    return sorted(((c, e) for e, c in merged.items() if c != 0), key=lambda t: t[1])


def parse_dense(text: str) -> DensePoly:
    terms = parse_poly_terms(text)
    if not terms:
        raise PolynomialError("zero polynomial")
    coeffs = [Fraction(0)] * (terms[-1][1] + 1)
    for c, e in terms:
        coeffs[e] = c
    return DensePoly(QQ, coeffs)


def format_terms(h: SparsePoly) -> List[List[str]]:
    return [[str(c), str(e)] for c, e in reversed(h.terms)]


def render_plain(h: SparsePoly) -> str:
    """Human-readable text that re-parses to the same polynomial."""
    parts = []
    for c, e in reversed(h.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            x = "x" if e == 1 else f"x^{e}"
            body = x if mag == 1 else f"{mag}*{x}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_field(text: str) -> ffield.FqContext:
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?", text.strip())
    if not m:
        raise PolynomialError(f"bad field spec {text!r}; expected p or p^k")
    return ffield.Fq(int(m.group(1)), int(m.group(2) or 1))


def parse_dense_fq(text: str, field: ffield.FqContext) -> DensePoly:
    terms = parse_poly_terms(text)
    if not terms:
        raise PolynomialError("zero polynomial")
    coeffs = [field.zero] * (terms[-1][1] + 1)
    for c, e in terms:
        val = field.mul(field.from_int(c.numerator), field.inv(field.from_int(c.denominator)))
        coeffs[e] = field.add(coeffs[e], val)
    return DensePoly(field, coeffs)


def format_terms_fq(h: SparsePoly, field: ffield.FqContext) -> List[List[str]]:
    return [[str(field.key(c)), str(e)] for c, e in reversed(h.terms)]


def parse_matrix(text: str) -> List[Tuple[int, ...]]:
    """JSON list of integer row vectors."""
    data = json.loads(text)
    if not isinstance(data, list) or not data:
        raise PolynomialError("matrix must be a nonempty JSON list of rows")
    rows = [tuple(int(x) for x in row) for row in data]
    if len({len(r) for r in rows}) != 1:
        raise PolynomialError("matrix rows must have equal length")
    return rows


# ---------------------------------------------------------------------------
# Output plumbing


def emit(payload: dict, plain: bool, plain_lines: List[str]) -> None:
    if plain:
        for line in plain_lines:
            click.echo(line)
    else:
        click.echo(json.dumps(payload))


def fail_none(plain: bool) -> None:
    if plain:
        click.echo("NONE")
    else:
        click.echo(json.dumps({"result": None}))
    sys.exit(1)


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (
            PolynomialError,
            lattice.LatticeError,
            qsparse.BoundRefusal,
            json.JSONDecodeError,
            ValueError,
            ZeroDivisionError,
        ) as exc:
            click.echo(json.dumps({"error": str(exc)}), err=True)
            sys.exit(2)

    return wrapper


seed_option = click.option(
    "--seed",
    type=int,
    default=0,
    envvar="SPARSEMULT_SEED",
    show_default=True,
    help="Deterministic seed (env: SPARSEMULT_SEED).",
)
plain_option = click.option(
    "--plain", is_flag=True, help="Human-readable text instead of JSON."
)


@click.group()
def main() -> None:
    """Exact sparse-multiple computations for polynomials over Q and F_q."""


# ---------------------------------------------------------------------------
# Rational-side commands


@main.command()
@click.argument("poly")
@plain_option
@handle_errors
def factor(poly: str, plain: bool) -> None:
    """Irreducible factorization over Q."""
    f = parse_dense(poly)
    fac = qfactor.factor_q(f)
    payload = {
        "unit": str(fac.unit),
        "xpower": fac.xpower,
        "factors": [
            {"terms": format_terms(SparsePoly.from_dense(g)), "multiplicity": m}
            for g, m in fac.factors
        ],
    }
    lines = [f"unit: {fac.unit}", f"xpower: {fac.xpower}"] + [
        f"({render_plain(SparsePoly.from_dense(g))})^{m}" for g, m in fac.factors
    ]
    emit(payload, plain, lines)


@main.command("binomial-q")
@click.argument("poly")
@plain_option
@handle_errors
def binomial_q(poly: str, plain: bool) -> None:
    """Least-degree binomial multiple x^b (x^m - r) over Q, r in power form."""
    f = parse_dense(poly)
    res = qbinomial.binomial_multiple_q(f)
    if res is None:
        fail_none(plain)
    payload = {
        "b": res.xpower,
        "m": res.degree,
        "base": str(res.constant.base),
        "exponent": res.constant.exponent,
        "verified": True,
    }
    emit(
        payload,
        plain,
        [
            f"b: {res.xpower}",
            f"m: {res.degree}",
            f"r: ({res.constant.base})^{res.constant.exponent}",
        ],
    )


@main.command("sparse-q")
@click.argument("poly")
@click.option("--t", "t", type=int, required=True, help="Sparsity bound.")
@click.option("--height", "c", type=int, required=True, help="Height bound.")
@click.option("--degree-cap", type=int, default=None, help="Override the degree bound.")
@click.option("--engine", type=click.Choice(["oracle", "sieve"]), default="oracle")
@seed_option
@plain_option
@handle_errors
def sparse_q(
    poly: str, t: int, c: int, degree_cap: Optional[int], engine: str, seed: int, plain: bool
) -> None:
    """Sparsest multiple with sparsity <= t and height <= c over Q."""
    f = parse_dense(poly)
    res = qsparse.sparsest_multiple_q(
        f, t, c, degree_cap_override=degree_cap, engine=engine, seed=seed
    )
    if res.multiple is None:
        fail_none(plain)
    h = res.multiple
    payload = {
        "sparsity": h.sparsity,
        "degree": h.degree,
        "terms": format_terms(h),
        "verified": True,
        "bound_used": res.bound_used,
        "bound_overridden": res.bound_overridden,
        "engine": engine,
        "seed": seed,
    }
    emit(
        payload,
        plain,
        [
            render_plain(h),
            f"sparsity: {h.sparsity}  degree: {h.degree}  height: {sparse_height(h)}",
            f"bound_used: {res.bound_used}  engine: {engine}  seed: {seed}",
        ],
    )


@main.command("sparse-bounded")
@click.argument("poly")
@click.option("--t", "t", type=int, required=True, help="Sparsity bound.")
@click.option("--degree", "n", type=int, required=True, help="Degree bound.")
@click.option("--height", "c", type=int, required=True, help="Height bound.")
@click.option("--engine", type=click.Choice(["oracle", "sieve"]), default="oracle")
@seed_option
@plain_option
@handle_errors
def sparse_bounded(
    poly: str, t: int, n: int, c: int, engine: str, seed: int, plain: bool
) -> None:
    """Sparsest multiple with sparsity <= t, degree <= n, height <= c."""
    f = parse_dense(poly)
    h = sparsebound.sparsest_bounded(f, t, n, c, engine=engine, seed=seed)
    if h is None:
        fail_none(plain)
    payload = {
        "sparsity": h.sparsity,
        "degree": h.degree,
        "terms": format_terms(h),
        "verified": True,
        "engine": engine,
        "seed": seed,
    }
    emit(payload, plain, [render_plain(h)])


# ---------------------------------------------------------------------------
# Finite-field commands


@main.command("binomial-fq")
@click.argument("poly")
@click.option("--field", "field_spec", required=True, help="Field size p or p^k.")
@seed_option
@plain_option
@handle_errors
def binomial_fq(poly: str, field_spec: str, seed: int, plain: bool) -> None:
    """Least-degree binomial multiple x^b (x^n - c)^(p^e) over F_q."""
    field = parse_field(field_spec)
    f = parse_dense_fq(poly, field)
    res = ffield.binomial_multiple_fq(f, seed=seed)
    h = res.to_sparse()
    payload = {
        "b": res.xpower,
        "n": res.n,
        "constant": field.key(res.constant.value),
        "frobpower": res.frobpower,
        "degree": res.degree,
        "terms": format_terms_fq(h, field),
        "verified": True,
        "seed": seed,
    }
    emit(
        payload,
        plain,
        [
            f"b: {res.xpower}  n: {res.n}  constant: {field.key(res.constant.value)}"
            f"  frobpower: {res.frobpower}  degree: {res.degree}"
        ],
    )


# ---------------------------------------------------------------------------
# Lattice commands


@main.group()
def lattice_group() -> None:
    """Integer-lattice utilities."""


main.add_command(lattice_group, name="lattice")


@lattice_group.command("shortest-linf")
@click.argument("matrix")
@click.option("--engine", type=click.Choice(["oracle", "sieve"]), default="oracle")
@seed_option
@plain_option
@handle_errors
def lattice_shortest(matrix: str, engine: str, seed: int, plain: bool) -> None:
    """Shortest nonzero vector (infinity norm); rows are lattice generators."""
    gens = parse_matrix(matrix)
    if engine == "sieve":
        v = lattice.shortest_linf_sieve(gens, seed)
    else:
        v = lattice.shortest_linf_enumerate(gens)
    payload = {
        "vector": list(v),
        "linf": max(abs(x) for x in v),
        "engine": engine,
        "seed": seed,
    }
    emit(payload, plain, [f"{list(v)}  linf={payload['linf']}"])


@lattice_group.command("snf")
@click.argument("matrix")
@plain_option
@handle_errors
def lattice_snf(matrix: str, plain: bool) -> None:
    """Smith normal form T = P*S*Q with unimodular P, Q."""
    t = lattice.mat_from_rows(parse_matrix(matrix))
    snf = lattice.smith_normal_form(t)
    payload = {
        "S": [list(r) for r in snf.S],
        "P": [list(r) for r in snf.P],
        "Q": [list(r) for r in snf.Q],
        "invariant_factors": list(snf.invariant_factors),
    }
    emit(
        payload,
        plain,
        [f"invariant factors: {list(snf.invariant_factors)}"]
        + [f"S row: {list(r)}" for r in snf.S],
    )


@lattice_group.command("kernel")
@click.argument("matrix")
@plain_option
@handle_errors
def lattice_kernel(matrix: str, plain: bool) -> None:
    """Integer kernel basis vectors of the matrix."""
    t = lattice.mat_from_rows(parse_matrix(matrix))
    ker = lattice.kernel_basis(t)
    vecs = [list(v) for v in lattice.mat_cols(ker)] if ker else []
    payload = {"kernel": vecs}
    emit(payload, plain, [str(v) for v in vecs] or ["(trivial)"])


# ---------------------------------------------------------------------------
# Gadget commands


@main.group()
def gadget() -> None:
    """Hardness-reduction gadget constructions."""


@gadget.command("subset-sum")
@click.option("--z", "z_spec", required=True, help="Comma-separated integers.")
@click.option("--t", "t", type=int, required=True, help="Target sum.")
@click.option("--w", "w", type=int, required=True, help="Subset size.")
@plain_option
@handle_errors
def gadget_subset_sum(z_spec: str, t: int, w: int, plain: bool) -> None:
    """Vandermonde-style matrix whose kernel encodes subset-sum solutions."""
    z = [int(s) for s in z_spec.split(",")]
    m = lattice.subset_sum_matrix(z, t, w)
    payload = {"matrix": [list(r) for r in m]}
    emit(payload, plain, [str(list(r)) for r in m])


@gadget.command("order")
@click.option("--field", "field_spec", required=True, help="Field size p or p^k.")
@click.option("--elem", required=True, help="Field element as a polynomial in x.")
@click.option("--t", "t", type=int, required=True, help="Sparsity parameter.")
@plain_option
@handle_errors
def gadget_order(field_spec: str, elem: str, t: int, plain: bool) -> None:
    """Order-finding gadget: product of minimal polynomials of a^0..a^(t-1)."""
    field = parse_field(field_spec)
    g = parse_dense_fq(elem, field)
    if isinstance(field, ffield.ExtensionField):
        val = field.zero
        for c in reversed(g.coeffs):
            val = field.add(field.mul(val, field.gen), c)
    else:
        if g.degree > 0:
            raise PolynomialError("prime-field element must be a constant")
        val = g.coeff(0)
    out = ffield.order_gadget(ffield.FqElem(field, val), t)
    base = out.ring
    h = SparsePoly.from_dense(out)
    payload = {"terms": format_terms_fq(h, base), "degree": out.degree}
    emit(payload, plain, [f"degree {out.degree}: {payload['terms']}"])


# ---------------------------------------------------------------------------
# Bound commands


@main.group()
def bound() -> None:
    """Numeric bounds used by the search algorithms."""


@bound.command("degree")
@click.option("--d", "d", type=int, required=True, help="Degree of f.")
@click.option("--t", "t", type=int, required=True, help="Sparsity bound.")
@click.option("--height", "c", type=int, required=True, help="Height bound.")
@plain_option
@handle_errors
def bound_degree(d: int, t: int, c: int, plain: bool) -> None:
    """Degree bound for the bounded sparsest-multiple search."""
    n = qsparse.degree_bound(d, t, c)
    emit({"bound": n}, plain, [str(n)])


@bound.command("risman")
@click.option("--d", "d", type=int, required=True, help="Degree of f.")
@plain_option
@handle_errors
def bound_risman(d: int, plain: bool) -> None:
    """Degree cap for minimal binomial multiples of degree-d irreducibles."""
    n = qbinomial.risman_degree_cap(d)
    emit({"bound": n}, plain, [str(n)])


if __name__ == "__main__":
    main()
