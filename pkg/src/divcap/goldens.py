"""Built-in worked examples and their expected text, stored verbatim.

Regression against the reference computations is a plain string
comparison between ``render_*`` output and the constants below.
"""

from __future__ import annotations

from .commutativity import CommutatorReport, verify_formula6
from .cycles import MonomialSetting, csum, div_frac
from .parse import parse_element, parse_frac
from .primes import HeightOnePrime, alpha_sequence, support_partition

EX17_VARS = ("x", "y", "z")
EX17_U, EX17_V = "xz", "xy"

EX5_VARS = ("x", "w", "rho", "y", "z")
EX5_U, EX5_V = "x^2*w^3*rho*z^2", "x^4*w^6*rho^3*y"

GOLDEN_17 = """\
(xz)∩(xy)∩[A] = 1*[A/(x,y)] + 1*[A/(y,z)]
(xy)∩(xz)∩[A] = 1*[A/(x,z)] + 1*[A/(y,z)]
difference = div((x), y/z) = 1*[A/(x,y)] - 1*[A/(x,z)]
equal = true
"""

GOLDEN_5 = """\
u = x^2*w^3*rho*z^2
v = x^4*w^6*rho^3*y
(u)∩(v)∩[A] = 2*[A/(x,y)] + 3*[A/(w,y)] + 1*[A/(rho,y)] + 2*[A/(y,z)]
(v)∩(u)∩[A] = 8*[A/(x,z)] + 12*[A/(w,z)] + 6*[A/(rho,z)] + 2*[A/(y,z)]
witness (x): v^2/u^4 = a1/b1 with a1 = rho^2*y^2, b1 = z^8
witness (w): v^3/u^6 = a2/b2 with a2 = rho^3*y^3, b2 = z^12
witness (rho): v/u^3 = a3/b3 with a3 = y, b3 = x^2*w^3*z^6
alpha = (0, 0, 2), G = 2
difference = 2*[A/(x,y)] - 8*[A/(x,z)] + 3*[A/(w,y)] - 12*[A/(w,z)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]
simplified: div((x), y^2/z^8) + div((w), y^3/z^12) + div((rho), y/z^6) = 2*[A/(x,y)] - 8*[A/(x,z)] + 3*[A/(w,y)] - 12*[A/(w,z)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]
div((x), a1/b1) + div((w), a2/b2) + div((rho), a3/b3) = 2*[A/(x,y)] - 8*[A/(x,z)] + 3*[A/(w,y)] - 12*[A/(w,z)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]
equal = true
"""

# witness ratios with the unit factors dropped: div(p_i, y-part / z-part) per common prime
EX5_SIMPLIFIED = (("x", "y^2/z^8"), ("w", "y^3/z^12"), ("rho", "y/z^6"))


def _power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def render_commutator(report: CommutatorReport, u_label: str | None = None, v_label: str | None = None) -> str:
    """Text report: both cap cycles, the witness sum and the verdict."""
    ul = u_label or str(report.u)
    vl = v_label or str(report.v)
    lines = [
        f"({ul})∩({vl})∩[A] = {report.uv}",
        f"({vl})∩({ul})∩[A] = {report.vu}",
    ]
    if report.witness.is_empty():
        lines.append(f"difference = {report.lhs}")
    else:
        terms = " + ".join(f"div({e.prime}, {e.a / e.b})" for e in report.witness)
        lines.append(f"difference = {terms} = {report.rhs}")
        if report.lhs != report.rhs:
            lines.append(f"commutator = {report.lhs}")
    lines.append(f"equal = {'true' if report.equal else 'false'}")
    return "\n".join(lines) + "\n"


def example_17() -> tuple[str, bool]:
    u, v = parse_element(EX17_U, EX17_VARS), parse_element(EX17_V, EX17_VARS)
    report = verify_formula6(u, v, MonomialSetting())
    return render_commutator(report), report.equal


def example_5() -> tuple[str, bool]:
    vars = EX5_VARS
    setting = MonomialSetting()
    u, v = parse_element(EX5_U, vars), parse_element(EX5_V, vars)
    report = verify_formula6(u, v, setting)
    alpha = alpha_sequence(support_partition(u, v))
    lines = [f"u = {u}", f"v = {v}", f"(u)∩(v)∩[A] = {report.uv}", f"(v)∩(u)∩[A] = {report.vu}"]
    by_prime = {e.prime: e for e in report.witness}
    for i, (p, n, m) in enumerate(alpha.order, 1):
        e = by_prime[p]
        lines.append(
            f"witness {p}: {_power('v', n)}/{_power('u', m)} = a{i}/b{i} with a{i} = {e.a}, b{i} = {e.b}"
        )
    lines.append(f"alpha = ({', '.join(map(str, alpha.alphas))}), G = {alpha.G}")
    lines.append(f"difference = {report.lhs}")
    simplified = csum(
        (div_frac(HeightOnePrime.variable(vars, p), parse_frac(f, vars), setting) for p, f in EX5_SIMPLIFIED),
        vars, len(vars) - 2,
    )
    simplified_text = " + ".join(f"div(({p}), {f})" for p, f in EX5_SIMPLIFIED)
    lines.append(f"simplified: {simplified_text} = {simplified}")
    wit_text = " + ".join(f"div({p}, a{i}/b{i})" for i, (p, _, _) in enumerate(alpha.order, 1))
    lines.append(f"{wit_text} = {report.rhs}")
    ok = report.equal and simplified == report.lhs
    lines.append(f"equal = {'true' if ok else 'false'}")
    return "\n".join(lines) + "\n", ok


EXAMPLES = {"1.7": example_17, "5": example_5}
