import sys
import json
import argparse
import contextlib

import frobenius
import gmatrix
import polyring
import skein2
import symfun
import utils

class UsageError(Exception):
    pass

class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

def multiplicities(text):
    try:
        values = [int(k) for k in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if any(k < 1 for k in values):
        raise argparse.ArgumentTypeError(f"multiplicities must be positive, got {text}")
    return values

def non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value

def positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value

def dual_basis(args):
    sys_ = frobenius.universal(args.n)
    basis = frobenius.dual_basis(sys_)
    if args.json:
        return [[frobenius.element_to_json(x), frobenius.element_to_json(y)] for x, y in basis]
    return str(basis)

def genus_term(args):
    g = frobenius.genus_term(frobenius.universal(args.n))
    if args.json:
        return frobenius.element_to_json(g)
    return str(g)

def surface_eval(args):
    sys_ = frobenius.universal(args.n)
    mark = sys_.element(args.mark) if args.mark else None
    value = frobenius.closed_surface_eval(sys_, args.genus, mark)
    if args.json:
        return {"n": args.n, "genus": args.genus, "mark": args.mark or "1", "value": str(value)}
    return str(value)

def g_matrix(args):
    if args.power is not None:
        matrix = gmatrix.g2_power(args.power)
    elif args.symmetric:
        matrix = gmatrix.g_matrix_symmetric(args.n)
        if matrix != gmatrix.g_matrix_from_substitution(args.n):
            raise utils.InternalInconsistency("symmetric closed form differs from the substituted matrix")
    else:
        matrix = gmatrix.g_matrix_recursive(args.n)
        if matrix != gmatrix.g_matrix_operator(args.n):
            raise utils.InternalInconsistency("recursive matrix differs from multiplication by g")
    if args.json:
        return matrix.to_json()
    return str(matrix)

def roots_check(args):
    vanishes = frobenius.check_g_square_zero(args.multiplicities)
    if args.json:
        return {"multiplicities": args.multiplicities, "g_square_zero": vanishes}
    return "true" if vanishes else "false"

def product_system(args):
    prod = frobenius.product_system(args.multiplicities)
    crt = frobenius.crt_map_check(args.multiplicities)
    if args.json:
        return {"factors": [frobenius.system_to_json(f) for f in prod.factors], "crt": crt}
    lines = []
    for root, factor in zip(prod.roots, prod.factors):
        lines += [f"{root}: {frobenius.polynomial(factor)}"]
    lines += [f"crt: {'true' if crt else 'false'}"]
    return "\n".join(lines)

def symcheck(args):
    powers = [args.power] if args.power is not None else [1, 2, 3]
    results = []
    for a in utils.progress(powers, desc="SYMCHECK", verbose=args.verbose):
        for b in range(1, args.n+1):
            results += [(a, b, symfun.verify_product_identities(a, b, args.n))]
    if args.json:
        return [{"a": a, "b": b, "holds": ok} for a, b, ok in results]
    return "\n".join(f"p{a}*e{b}: {'true' if ok else 'false'}" for a, b, ok in results)

def skein_normalize(args):
    normal = skein2.normalize(skein2.config_element(skein2.parse_config(args.config)))
    if args.json:
        return normal.to_json()
    return str(normal)

def lambda_f(args):
    sys_ = frobenius.specialize_roots(args.multiplicities)
    surface = skein2.AbstractSurface([(skein2.MARKED_F, args.power or 0)])
    value = skein2.lambda_F_eval(surface, sys_, args.root)
    functional = skein2.neckcut_functional_check(args.multiplicities, args.root)
    if args.json:
        return {"value": str(value), "respects_neck_cutting": functional}
    return f"{value}\nneck-cutting: {'true' if functional else 'false'}"

def witness(args):
    i = args.genus if args.genus is not None else 1
    found = skein2.dependence_witness(i, skein2.tube_params(i))
    if args.json:
        return {"lhs": found.lhs.to_json(), "rhs": found.rhs.to_json(), "steps": [s.to_json() for s in found.steps]}
    lhs, rhs = found.constrained()
    return f"{found.lhs} = {found.rhs}\nwith 4*a2 + a1^2 = 0: ({lhs}) * [p,p,p] = ({rhs}) * [p]"

VERBS = {
    "dual-basis": dual_basis,
    "genus-term": genus_term,
    "surface-eval": surface_eval,
    "gmatrix": g_matrix,
    "roots-check": roots_check,
    "product-system": product_system,
    "symcheck": symcheck,
    "skein-normalize": skein_normalize,
    "lambda-f": lambda_f,
    "witness": witness,
}

def build_parser():
    parser = ArgumentParser(prog="cli.py", description='exact sl(n) Frobenius extension and skein computations')
    verbs = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        sub = verbs.add_parser(verb)
        sub.add_argument('--n', type=positive, help='rank of the Frobenius extension', default=2)
        sub.add_argument('--power', type=positive, help='exponent (matrix power, power sum degree, mark degree)')
        sub.add_argument('--genus', type=non_negative, help='genus of the closed surface', default=None)
        sub.add_argument('--mark', type=str, help='polynomial in x decorating the surface')
        sub.add_argument('--multiplicities', type=multiplicities, help='root multiplicities k1,k2,...')
        sub.add_argument('--root', type=positive, help='index of the root for lambda-f', default=1)
        sub.add_argument('--config', type=str, help='sphere configuration, e.g. d,p,p')
        sub.add_argument('--symmetric', help='use the symmetric function form', action='store_true')
        sub.add_argument('--json', help='print JSON instead of text', action='store_true')
        sub.add_argument('-v', '--verbose', help='show progress on stderr', action='store_true')
    return parser

def validate(args):
    if args.verb in {"roots-check", "product-system", "lambda-f"} and args.multiplicities is None:
        raise UsageError(f"{args.verb} needs --multiplicities")
    if args.verb == "lambda-f" and args.root > len(args.multiplicities):
        raise UsageError(f"--root must lie in 1..{len(args.multiplicities)}, got {args.root}")
    if args.verb == "skein-normalize" and args.config is None:
        raise UsageError("skein-normalize needs --config")
    if args.verb == "gmatrix" and args.power is not None and args.n != 2:
        raise UsageError("--power is only available for n = 2")
    if args.verb == "surface-eval" and args.genus is None:
        args.genus = 0

def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with contextlib.redirect_stdout(out):
            args = build_parser().parse_args(argv)
        validate(args)
        result = VERBS[args.verb](args)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 2
    except SystemExit as e:
        return e.code or 0
    except utils.DomainError as e:
        print(f"{type(e).__name__}: {e}", file=err)
        return 1
    except Exception:
        utils.log_traceback("CLI", err)
        return 1

    if args.json:
        print(json.dumps(result), file=out)
    else:
        print(result, file=out)
    return 0

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
