"""Command-line interface.

Exit status: 0 when every requested verification holds, 1 when an identity
fails, 2 for parse errors, unsupported settings and violated hypotheses.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from typing import Iterable, Sequence, TextIO

from . import random_instances as R
from .commutativity import (
    CommutatorReport,
    IdentityReport,
    commutator,
    verify_ab_swap,
    verify_boxed,
    verify_equal_orders,
    verify_formula6,
    verify_lemma51,
    verify_on_divisor,
    verify_principal_P_length,
    verify_single_prime,
)
from .cycles import Cycle, cap, div_cycle, div_frac, make_setting
from .errors import ParseError, PreconditionError, UnsupportedSetting, VerificationFailure
from .goldens import EXAMPLES, GOLDEN_5, GOLDEN_17, render_commutator
from .lengths import (
    PIDMatrix,
    PointPrime,
    check_chi,
    check_det_length,
    coord_local_length,
    pid_coker_length,
    plane_mult,
)
from .parse import parse_element, parse_frac, parse_poly, parse_rational
from .primes import HeightOnePrime, alpha_sequence, make_witness, support_partition
from .tame import gersten_compose, tame

VARS_ENV = "DIVCAP_VARS"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

IDENTITIES = ("formula6", "boxed", "equal-orders", "single-prime", "ab-swap", "lemma51",
              "principal-length", "divisor")
FUZZ_KINDS = ("formula6", "coprime", "plane", "pid", "lemma51", "tame", "witness")


class Out:
    """Text or key<TAB>value output."""

    def __init__(self, fmt: str, stream: TextIO):
        self.fmt = fmt
        self.stream = stream

    def text(self, s: str) -> None:
        if self.fmt == "text":
            self.stream.write(s if s.endswith("\n") else s + "\n")

    def kv(self, key: str, value) -> None:
        if self.fmt == "structured":
            v = str(value).replace("\t", " ").replace("\n", " | ")
            self.stream.write(f"{key}\t{v}\n")

    def both(self, key: str, value, label: str | None = None) -> None:
        self.text(f"{label or key} = {value}")
        self.kv(key, value)


def _vars(args) -> tuple[str, ...]:
    raw = args.vars or os.environ.get(VARS_ENV)
    if not raw:
        raise ParseError(f"no variable context: pass --vars or set {VARS_ENV}")
    names = tuple(v.strip() for v in raw.split(",") if v.strip())
    if len(set(names)) != len(names):
        raise ParseError(f"repeated variable in {raw!r}")
    return names


def _perturbation(text: str | None, vars):
    if not text:
        return []
    out = []
    for part in text.split(","):
        e = parse_element(part, vars)
        out.extend(e.factors)
    return out


def _emit_commutator(out: Out, rep: CommutatorReport, prefix: str = "") -> None:
    out.text(render_commutator(rep))
    out.kv(prefix + "u", rep.u)
    out.kv(prefix + "v", rep.v)
    out.kv(prefix + "uv", rep.uv)
    out.kv(prefix + "vu", rep.vu)
    out.kv(prefix + "lhs", rep.lhs)
    out.kv(prefix + "rhs", rep.rhs)
    for e in rep.witness:
        out.kv(f"{prefix}witness.{e.prime}", e.a / e.b)
    for p, c in rep.breakdown:
        out.kv(f"{prefix}div.{p}", c)
    out.kv(prefix + "equal", "true" if rep.equal else "false")


def _emit_report(out: Out, rep: IdentityReport, prefix: str = "") -> None:
    out.text(f"{rep.name}: {'holds' if rep.ok else 'FAILS'}")
    for k, v in rep.data.items():
        out.text(f"  {k} = {v}")
    for c in rep.checks:
        mark = "ok" if c.ok else "FAIL"
        out.text(f"  [{mark}] {c.label}")
        out.text(f"      lhs = {c.lhs}")
        out.text(f"      rhs = {c.rhs}")
    out.kv(prefix + "identity", rep.name)
    for k, v in rep.data.items():
        out.kv(prefix + "data." + k, v)
    for i, c in enumerate(rep.checks):
        out.kv(f"{prefix}check.{i}.label", c.label)
        out.kv(f"{prefix}check.{i}.lhs", c.lhs)
        out.kv(f"{prefix}check.{i}.rhs", c.rhs)
        out.kv(f"{prefix}check.{i}.ok", "true" if c.ok else "false")
    out.kv(prefix + "ok", "true" if rep.ok else "false")


# -- commands --------------------------------------------------------------------------


def cmd_commutator(args, out: Out) -> int:
    vars = _vars(args)
    u, v = parse_element(args.u, vars), parse_element(args.v, vars)
    setting = make_setting(args.setting)
    A = Cycle.fundamental(vars)
    uv = cap(u, cap(v, A, setting), setting)
    vu = cap(v, cap(u, A, setting), setting)
    out.both("uv", uv, f"({u})∩({v})∩[A]")
    out.both("vu", vu, f"({v})∩({u})∩[A]")
    out.both("commutator", uv - vu)
    return EXIT_OK


def _verify_one(identity: str, u, v, args, vars, setting):
    if identity == "formula6":
        return verify_formula6(u, v, setting)
    if identity == "boxed":
        if not args.prime:
            raise PreconditionError("boxed needs --prime (a height-two coordinate prime, e.g. y,z)")
        from .lengths import CoordinatePrime

        return verify_boxed(u, v, CoordinatePrime(vars, args.prime.split(",")), setting)
    if identity == "equal-orders":
        return verify_equal_orders(u, v, setting)
    if identity == "single-prime":
        return verify_single_prime(u, v, setting)
    if identity == "ab-swap":
        return verify_ab_swap(u, v, _perturbation(args.perturb, vars), setting)
    if identity == "lemma51":
        return verify_lemma51(u, v, _perturbation(args.perturb, vars), setting)
    if identity == "principal-length":
        return verify_principal_P_length(u, v, setting)
    if identity == "divisor":
        if not args.prime:
            raise PreconditionError("divisor needs --prime (one variable, e.g. w)")
        return verify_on_divisor(HeightOnePrime.variable(vars, args.prime), u, v, setting)
    raise ValueError(identity)


def _batch_lines(stream: TextIO) -> Iterable[tuple[int, str, str]]:
    for i, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ";" not in line:
            raise ParseError(f"line {i}: expected 'u ; v'", line, len(line))
        a, b = line.split(";", 1)
        yield i, a.strip(), b.strip()


def cmd_verify(args, out: Out) -> int:
    vars = _vars(args)
    setting = make_setting(args.setting)
    if args.batch:
        jobs = list(_batch_lines(sys.stdin))
    else:
        if args.u is None or args.v is None:
            raise ParseError("verify needs -u and -v (or --batch)")
        jobs = [(0, args.u, args.v)]
    status = EXIT_OK
    for i, a, b in jobs:
        u, v = parse_element(a, vars), parse_element(b, vars)
        rep = _verify_one(args.identity, u, v, args, vars, setting)
        prefix = f"{i}." if args.batch else ""
        if args.batch:
            out.text(f"# line {i}: u = {u}, v = {v}")
        if isinstance(rep, CommutatorReport):
            _emit_commutator(out, rep, prefix)
        else:
            _emit_report(out, rep, prefix)
        if not rep.ok:
            status = EXIT_FAIL
    return status


def cmd_witness(args, out: Out) -> int:
    vars = _vars(args)
    u, v = parse_element(args.u, vars), parse_element(args.v, vars)
    part = support_partition(u, v)
    out.both("both", ", ".join(f"{p}: n={n} m={m}" for p, n, m in part.both) or "-")
    out.both("only_u", ", ".join(f"{p}: s={s}" for p, s in part.only_u) or "-")
    out.both("only_v", ", ".join(f"{p}: t={t}" for p, t in part.only_v) or "-")
    for e in make_witness(u, v):
        out.text(f"{e.prime}: a = {e.a}, b = {e.b}   (a/b = v^{e.n}/u^{e.m} = {e.a / e.b})")
        out.kv(f"a{e.prime}", e.a)
        out.kv(f"b{e.prime}", e.b)
    if part.both:
        al = alpha_sequence(part)
        out.both("order", ", ".join(str(p) for p, _, _ in al.order))
        out.both("alpha", ", ".join(map(str, al.alphas)))
        out.both("G", al.G)
    return EXIT_OK


def _parse_matrix(text: str, var: str) -> PIDMatrix:
    ctx = (var,)
    rows = [r for r in text.split(";")]
    return PIDMatrix([[parse_poly(e, ctx) for e in r.split(",")] for r in rows if r.strip()], var)


def cmd_length(args, out: Out) -> int:
    setting = args.setting or "monomial"
    if setting == "pid":
        var = args.var
        ctx = (var,)
        m = PIDMatrix.free(args.free, var) if args.free else _parse_matrix(args.matrix or "", var)
        out.both("length", pid_coker_length(m))
        status = EXIT_OK
        if args.chi:
            rep = check_chi(m, parse_poly(args.chi, ctx))
            out.both("quotient_length", rep.quotient_length, "l(M/xM)")
            out.both("kernel_length", rep.kernel_length, "l(_xM)")
            out.both("rank", rep.rank)
            out.both("chi_ok", "true" if rep.ok else "false")
            status = status if rep.ok else EXIT_FAIL
        if args.det:
            a, b = (parse_poly(s, ctx) for s in args.det)
            rep = check_det_length(m, a, b)
            out.both("coker_length", rep.coker_length)
            out.both("ord_a_minus_ord_b", rep.ord_a - rep.ord_b)
            out.both("det_ok", "true" if rep.ok else "false")
            status = status if rep.ok else EXIT_FAIL
        return status
    vars = _vars(args)
    if setting == "plane":
        if len(args.gens) != 2 or not args.point:
            raise PreconditionError("plane length needs --point a,b and exactly two --gens")
        a, b = (parse_rational(s) for s in args.point.split(","))
        F, G = (parse_poly(g, vars) for g in args.gens)
        out.both("length", plane_mult(PointPrime(vars, a, b), F, G))
        return EXIT_OK
    if not args.prime:
        raise PreconditionError("monomial length needs --prime (comma-separated variables)")
    from .lengths import coordinate_prime

    q = coordinate_prime(vars, args.prime.split(","))
    gens = [parse_element(g, vars) for g in args.gens]
    out.both("length", coord_local_length(q, gens))
    return EXIT_OK


def cmd_div(args, out: Out) -> int:
    vars = _vars(args)
    setting = make_setting(args.setting)
    if args.prime:
        names = args.prime.split(",")
        from .cycles import prime_from_gens

        p = prime_from_gens(vars, [parse_poly(g, vars) for g in names])
    else:
        from .cycles import UnitPrime

        p = UnitPrime(vars)
    f = parse_frac(args.element, vars)
    out.both("div", div_frac(p, f, setting) if not f.is_polynomial() else div_cycle(p, f, setting))
    return EXIT_OK


def cmd_tame(args, out: Out) -> int:
    vars = _vars(args)
    a, b = parse_frac(args.alpha, vars), parse_frac(args.beta, vars)
    t = tame(a, b)
    for p, r in t:
        out.text(f"{p}: {r}")
        out.kv(f"tame{p}", r)
    composed = gersten_compose(a, b, check=False)
    out.both("composed", composed)
    out.both("zero", "true" if composed.is_zero() else "false")
    return EXIT_OK if composed.is_zero() else EXIT_FAIL


def cmd_example(args, out: Out) -> int:
    text, ok = EXAMPLES[args.name]()
    golden = {"1.7": GOLDEN_17, "5": GOLDEN_5}[args.name]
    matches = text == golden
    out.text(text)
    for i, line in enumerate(text.splitlines()):
        k, _, v = line.partition(" = ")
        out.kv(f"line{i}", line)
    out.kv("golden", "match" if matches else "differs")
    if not matches:
        out.text("golden: differs")
    return EXIT_OK if ok and matches else EXIT_FAIL


def _fuzz_case(kind: str, rng: random.Random) -> tuple[bool, str]:
    if kind == "formula6":
        p = R.monomial_pair(rng)
        rep = verify_formula6(p.u, p.v, make_setting("monomial"))
        return rep.equal, f"u={p.u} v={p.v}"
    if kind == "coprime":
        p = R.coprime_pair(rng)
        c = commutator(p.u, p.v, make_setting("monomial"))
        return c.is_zero() and make_witness(p.u, p.v).is_empty(), f"u={p.u} v={p.v}"
    if kind == "plane":
        p = R.plane_pair(rng)
        rep = verify_formula6(p.u, p.v, make_setting("plane"))
        return rep.equal, f"u={p.u} v={p.v}"
    if kind == "pid":
        m = R.pid_matrix(rng)
        x = R.nonzero_t_poly(rng, 4)
        ok = check_chi(m, x).ok
        sq = R.pid_matrix(rng, square=True)
        from .resultant import determinant

        det = determinant([list(r) for r in sq.rows], ("t",))
        if not det.is_zero():
            b = R.nonzero_t_poly(rng, 2)
            ok = ok and check_det_length(sq, det * b, b).ok
        return ok, f"m={m} x={x}"
    if kind == "lemma51":
        p = R.lemma51_pair(rng)
        return verify_lemma51(p.u, p.v, (), make_setting("monomial")).ok, f"u={p.u} v={p.v}"
    if kind == "tame":
        a, b = R.laurent_pair(rng)
        return gersten_compose(a, b, check=False).is_zero(), f"alpha={a} beta={b}"
    if kind == "witness":
        p = R.monomial_pair(rng, min_common=1)
        setting = make_setting("monomial")
        base = verify_formula6(p.u, p.v, setting)
        from .primes import perturb_witness
        from .poly import Poly

        spare = [x for x in p.vars if not any(e.prime.generator.as_variable() == x for e in base.witness)]
        extra = [(Poly.variable(p.vars, x), rng.randint(1, 3)) for x in spare[:1]]
        pert = verify_formula6(p.u, p.v, setting, perturb_witness(base.witness, extra))
        return base.rhs == pert.rhs == base.lhs, f"u={p.u} v={p.v}"
    raise ValueError(kind)


def cmd_fuzz(args, out: Out) -> int:
    failures = 0
    t0 = time.perf_counter()
    for i in range(args.count):
        rng = random.Random(f"{args.seed}:{args.kind}:{i}")
        ok, desc = _fuzz_case(args.kind, rng)
        if not ok:
            failures += 1
            out.text(f"FAIL #{i}: {desc}")
            out.kv(f"fail.{i}", desc)
    elapsed = time.perf_counter() - t0
    out.text(f"{args.kind}: {args.count - failures}/{args.count} passed (seed {args.seed})")
    out.kv("kind", args.kind)
    out.kv("seed", args.seed)
    out.kv("count", args.count)
    out.kv("failures", failures)
    if args.timing:
        out.both("seconds", f"{elapsed:.2f}")
    return EXIT_OK if failures == 0 else EXIT_FAIL


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divcap",
        description="Exact intersection with principal divisors on polynomial rings.",
    )
    parser.add_argument("--format", choices=("text", "structured"), default="text",
                        help="text (default) or key<TAB>value lines")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, setting_choices=("auto", "monomial", "plane")) -> None:
        p.add_argument("--vars", help=f"comma-separated variable context (default: ${VARS_ENV})")
        p.add_argument("--setting", choices=setting_choices, default=None)

    p = sub.add_parser("commutator", help="(u)∩(v)∩[A] - (v)∩(u)∩[A]")
    common(p)
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("verify", help="verify one of the commutativity identities")
    common(p)
    p.add_argument("--identity", choices=IDENTITIES, default="formula6")
    p.add_argument("-u")
    p.add_argument("-v")
    p.add_argument("--prime", help="height-two prime for 'boxed' (e.g. y,z) or variable for 'divisor'")
    p.add_argument("--perturb", help="comma-separated factors J^lambda for ab-swap / lemma51")
    p.add_argument("--batch", action="store_true", help="read 'u ; v' lines from stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="support partition, witness pairs and alpha sequence")
    common(p)
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("length", help="a single length in the monomial, plane or pid setting")
    common(p, ("monomial", "plane", "pid"))
    p.add_argument("--prime", help="coordinate prime, e.g. x,y (monomial)")
    p.add_argument("--point", help="rational point a,b (plane)")
    p.add_argument("--gens", nargs="*", default=[], help="generators (monomial) or F G (plane)")
    p.add_argument("--matrix", help="rows separated by ';', entries by ',' (pid)")
    p.add_argument("--free", type=int, default=0, help="empty presentation of A^n (pid)")
    p.add_argument("--var", default="t", help="PID variable (default t)")
    p.add_argument("--chi", metavar="X", help="also check chi(M) = l(A/XA) rank M")
    p.add_argument("--det", nargs=2, metavar=("A", "B"), help="also check l(coker) = ord A - ord B")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("div", help="div(p, f) for a prime p (default: the zero ideal)")
    common(p)
    p.add_argument("--prime", help="comma-separated generators, e.g. x or x,y")
    p.add_argument("element")
    p.set_defaults(func=cmd_div)

    p = sub.add_parser("tame", help="tame symbol and its composition with div")
    p.add_argument("--vars")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_tame)

    p = sub.add_parser("example", help="replay a built-in worked example")
    p.add_argument("name", choices=sorted(EXAMPLES))
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("fuzz", help="seeded randomized verification")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--kind", choices=FUZZ_KINDS, default="formula6")
    p.add_argument("--timing", action="store_true", help="report elapsed seconds (not reproducible)")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out = Out(args.format, stdout)
    try:
        return args.func(args, out)
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except UnsupportedSetting as exc:
        stderr.write(f"unsupported setting: {exc}\n")
        return EXIT_USAGE
    except PreconditionError as exc:
        stderr.write(f"precondition violated: {exc}\n")
        return EXIT_USAGE
    except VerificationFailure as exc:
        stderr.write(f"verification failed: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
