"""Command-line front end; every subcommand prints one JSON document.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid flags, 3 guardrail
violation, 4 invalid input, 5 precision exhausted, 6 unknown subcommand.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import grouprings as gr
from . import suite
from .dirichlet import primitive_odd_characters
from .eisenstein import l_invariant_condition, verify_F_eigen
from .gamma import gamma_p
from .gauss import DEFAULT_MATRIX, GaussSumInstance, conjugate_product_check, gauss_sum, gross_koblitz_verify
from .lfunctions import ferrero_greenberg_report, lp_taylor, lp_value_at_zero
from .padic import PadicNumber, PrecisionError, padic_from_rational
from .quadratic import verify_rank_one

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARDRAIL, EXIT_INPUT, EXIT_PRECISION, EXIT_UNKNOWN = 0, 1, 2, 3, 4, 5, 6
PREC_ENV = "PADIC_STARK_PREC"
MAX_PREC = 40
MAX_QMAX = 400

# config keys and their parsers; the same names as the long flags
CONFIG_KEYS = {
    "prime": int, "prec": int, "at": str, "N": int, "a": int, "chi_modulus": int,
    "chi_index": int, "disc": int, "qmax": int, "group": str, "n": int,
    "modulus": int, "H": str, "S": str, "T": str, "calibration": str,
    "output": str, "seed": int, "pretty": lambda s: s.lower() in ("1", "true", "yes"),
}


class Guardrail(Exception):
    pass


def _ints(s: str | None) -> tuple:
    if s is None or s == "":
        return ()
    return tuple(int(x) for x in str(s).split(",") if x.strip())


def read_config(path: str) -> dict:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = CONFIG_KEYS[key](value)
    return out


def write_config(cfg: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for key in sorted(cfg):
            fh.write(f"{key} = {cfg[key]}\n")


def _default_prec(fallback: int) -> int:
    env = os.environ.get(PREC_ENV)
    return int(env) if env else fallback


def _character(modulus: int, index: int = 0):
    chars = primitive_odd_characters(modulus)
    if not chars:
        raise ValueError(f"no odd primitive character of conductor {modulus}")
    if not 0 <= index < len(chars):
        raise ValueError(f"chi-index must be in [0, {len(chars)})")
    return chars[index]


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise argparse.ArgumentTypeError("missing: " + ", ".join("--" + m.replace("_", "-") for m in missing))


# -- subcommands --------------------------------------------------------------


def cmd_gamma(args):
    _need(args, "prime", "at")
    x = Fraction(args.at)
    p = args.prime
    if x.denominator % p == 0:
        raise ValueError("the argument must lie in Z_p")
    z = padic_from_rational(x.numerator, x.denominator, p, args.prec + 4) if x else PadicNumber.zero(p, args.prec + 4)
    val = gamma_p(z, args.prec)
    signed = val.lift() if val.lift() <= p**args.prec // 2 else val.lift() - p**args.prec
    return {"prime": p, "at": str(x), "prec": args.prec, "value": val.to_record(), "signed_residue": signed}, True


def cmd_gauss(args):
    _need(args, "prime", "N", "a")
    inst = GaussSumInstance(args.prime, args.N, args.a, args.prec)
    g = gauss_sum(inst)
    conj = conjugate_product_check(inst)
    return {
        "p": inst.p, "N": inst.N, "a": inst.a, "f": inst.f, "prec": inst.prec,
        "gauss_sum": g.to_record(), "pi_valuation": int(g.valuation()),
        "conjugate_valuation": conj.valuation_gbar, "g_gbar_over_q_sign": conj.sign,
    }, conj.sign is not None


def cmd_gross_koblitz(args):
    cases = [(args.prime, args.N)] if args.prime and args.N else DEFAULT_MATRIX
    recs = []
    for p, N in cases:
        for a in ([args.a] if args.a else range(1, N)):
            recs.append(gross_koblitz_verify(GaussSumInstance(p, N, a, args.prec)).to_record())
    return {"prec": args.prec, "instances": recs}, all(r["pass"] for r in recs)


def cmd_lp(args):
    _need(args, "chi_modulus", "prime")
    chi = _character(args.chi_modulus, args.chi_index)
    t = lp_taylor(chi, args.prime, args.prec)
    return {
        "chi_modulus": chi.modulus, "chi_label": list(chi.label), "p": args.prime, "prec": args.prec,
        "L_p(0)": t[0].to_record(), "L_p'(0)": t[1].to_record(), "L_p''(0)/2": t[2].to_record(),
        "L_p(0)_value_formula": lp_value_at_zero(chi, args.prime, prec=args.prec).to_record(),
    }, True


def cmd_fg(args):
    _need(args, "chi_modulus", "prime")
    r = ferrero_greenberg_report(_character(args.chi_modulus, args.chi_index), args.prime, args.prec)
    return r.to_record(), r.passed()


def cmd_iq(args):
    _need(args, "disc")
    r = verify_rank_one(args.disc, args.prime, args.prec)
    return r.to_record(), r.passed


def _datum(args) -> gr.AbelianFieldDatum:
    _need(args, "modulus", "S", "T")
    return gr.AbelianFieldDatum(args.modulus, _ints(args.H), _ints(args.S), _ints(args.T))


def cmd_theta(args):
    d = _datum(args)
    th = gr.theta_element(d)
    return {
        "N": d.N, "H": list(d.H), "S": ["inf", *d.S], "T": list(d.T), "G": list(d.group.invariants),
        "theta": th.to_record(), "integral": th.is_integral(),
        "interpolation": gr.interpolation_holds(d, th),
        "in_I^n": th.is_integral() and gr.membership_in_ideal_power(th, d.n), "n": d.n,
    }, th.is_integral()


def cmd_filtration(args):
    _need(args, "group", "n")
    G = gr.FiniteAbelianGroup.from_orders(list(_ints(args.group)))
    G.check_size(args.n + 1)
    facs = gr.ideal_power_structure(G, args.n)
    return {"group": list(G.invariants), "n": args.n, "invariant_factors": facs}, True


def cmd_refined(args):
    r = gr.refined_congruence_check_over_Q(_datum(args), args.calibration or gr.FROZEN_CALIBRATION)
    return r.to_record(), r.passed


def cmd_eisenstein(args):
    _need(args, "chi_modulus", "prime")
    if args.qmax > MAX_QMAX:
        raise Guardrail(f"qmax above {MAX_QMAX}")
    chi = _character(args.chi_modulus, args.chi_index)
    r = verify_F_eigen(chi, args.prime, n_max=args.qmax, prec=args.prec)
    rec = r.to_record()
    rec["l_invariant"] = l_invariant_condition(chi, args.prime, args.prec).to_record()
    return rec, r.passed


def cmd_all(args):
    results = suite.run_all(seed=args.seed or None)
    return {"criteria": [r.to_record() for r in results]}, all(r.passed for r in results)


COMMANDS = {
    "gamma": (cmd_gamma, "Gamma_p at a rational point"),
    "gauss": (cmd_gauss, "a Gauss sum in Q_q(pi)"),
    "gross-koblitz": (cmd_gross_koblitz, "Gross-Koblitz check"),
    "lp": (cmd_lp, "Taylor data of L_p(chi omega, s) at 0"),
    "verify-ferrero-greenberg": (cmd_fg, "three routes to L_p'(chi omega, 0)"),
    "verify-iq": (cmd_iq, "rank-one identity for an imaginary quadratic field"),
    "theta": (cmd_theta, "Stickelberger element theta_{S,T}"),
    "ideal-filtration": (cmd_filtration, "invariant factors of I^n/I^(n+1)"),
    "refined-check": (cmd_refined, "refined congruence over Q"),
    "eisenstein-check": (cmd_eisenstein, "Hecke eigenvalues of F* mod eps^2"),
    "all": (cmd_all, "the full acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value file; flags override it")
    common.add_argument("--prec", type=int, help=f"p-adic precision (default ${PREC_ENV} or 10)")
    common.add_argument("--output", help="write the JSON report here as well")
    common.add_argument("--pretty", action="store_true", default=None, help="indented JSON")
    common.add_argument("--seed", type=int)
    parser = argparse.ArgumentParser(prog="padic-stark", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--prime", type=int)
        if name == "gamma":
            sp.add_argument("--at", help="rational a/b with p not dividing b")
        if name in ("gauss", "gross-koblitz"):
            sp.add_argument("--N", type=int)
            sp.add_argument("-a", "--a", type=int)
        if name in ("lp", "verify-ferrero-greenberg", "eisenstein-check"):
            sp.add_argument("--chi-modulus", type=int)
            sp.add_argument("--chi-index", type=int)
        if name == "eisenstein-check":
            sp.add_argument("--qmax", type=int)
        if name == "verify-iq":
            sp.add_argument("--disc", type=int)
        if name in ("theta", "refined-check"):
            sp.add_argument("--modulus", type=int, help="N with L inside Q(mu_N)")
            sp.add_argument("--H", help="comma-separated units mod N generating H")
            sp.add_argument("--S", help="comma-separated finite primes of S")
            sp.add_argument("--T", help="comma-separated primes of T")
        if name == "refined-check":
            sp.add_argument("--calibration", choices=gr.CALIBRATIONS)
        if name == "ideal-filtration":
            sp.add_argument("--group", help="comma-separated cyclic orders")
            sp.add_argument("--n", type=int)
    return parser


DEFAULTS = {"prec": None, "chi_index": 0, "qmax": 60, "pretty": False, "seed": 0}


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Flags beat the config file, which beats the environment and built-in defaults."""
    cfg = read_config(args.config) if args.config else {}
    for key, value in cfg.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    for key, value in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    if args.prec is None:
        args.prec = _default_prec(8 if args.command in ("gross-koblitz", "gauss", "gamma") else 10)
    if not 1 <= args.prec <= MAX_PREC:
        raise Guardrail(f"precision must be in [1, {MAX_PREC}]")
    return args


def render(report: dict, pretty: bool) -> str:
    return json.dumps(report, indent=2 if pretty else None, sort_keys=True, separators=None if pretty else (",", ":"))


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        print(render({"error": "unknown subcommand", "message": argv[0]}, False), file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        args = resolve(args)
        report, ok = COMMANDS[args.command][0](args)
    except (Guardrail, gr.GuardrailError) as e:
        print(render({"error": "guardrail", "message": str(e)}, False), file=sys.stderr)
        return EXIT_GUARDRAIL
    except argparse.ArgumentTypeError as e:
        print(render({"error": "usage", "message": str(e)}, False), file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as e:
        print(render({"error": "precision", "message": str(e)}, False), file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, ZeroDivisionError, OSError) as e:
        print(render({"error": "input", "message": str(e)}, False), file=sys.stderr)
        return EXIT_INPUT
    report = {"command": args.command, "pass": ok, "report": report}
    text = render(report, args.pretty)
    print(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
