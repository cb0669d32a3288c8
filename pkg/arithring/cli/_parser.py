import argparse

from arithring._constants import _CONSTANTS

from . import _commands


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--bound", type=int, required=True, metavar="N", help="truncation bound N"
    )
    common.add_argument(
        "--field",
        choices=[_CONSTANTS.RATIONAL, _CONSTANTS.GAUSSIAN],
        default=_CONSTANTS.RATIONAL,
        help="coefficient field (default: rational)",
    )
    common.add_argument(
        "-o", "--output", metavar="PATH", default=None, help="write to PATH instead of stdout"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one sub-command per library operation."""
    parser = argparse.ArgumentParser(
        prog="arithring",
        description="Exact arithmetic in the truncated ring of arithmetical "
        "functions under unitary convolution.",
    )
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True
    common = _common_parser()

    def verb(name, handler, help_, *files):
        sub = verbs.add_parser(name, parents=[common], help=help_)
        for file_ in files:
            sub.add_argument(file_, metavar=file_.upper())
        sub.set_defaults(handler=handler)
        return sub

    verb("conv", _commands.conv, "unitary convolution of two functions", "left", "right")
    verb("dconv", _commands.dconv, "Dirichlet convolution of two functions", "left", "right")
    verb("associate", _commands.associate, "test whether two functions are associates", "left", "right")
    verb("inv", _commands.inv, "inverse of a unit", "input")
    sub = verb("pow", _commands.pow_, "unitary power", "input")
    sub.add_argument("--exponent", type=int, required=True, metavar="n")
    verb("mobius", _commands.mobius, "unitary Möbius function")
    verb("one", _commands.one_, "constant function 1")
    sub = verb("e", _commands.indicator, "indicator e_k")
    sub.add_argument("--index", type=int, required=True, metavar="k")
    verb("norm", _commands.norm_, "norm 1/order", "input")
    verb("degree", _commands.degree_, "minimum omega over the support", "input")
    verb("decompose", _commands.decompose, "canonical decomposition by leading prime", "input")
    sub = verb("filtration", _commands.filtration, "filtration degree", "input")
    sub.add_argument("--threshold", type=int, default=None, metavar="p")
    sub = verb("nilindex", _commands.nilindex, "nilpotency index", "input")
    sub.add_argument("--max-n", type=int, required=True, dest="max_n", metavar="n")
    verb("retract-sqf", _commands.retract_sqf_, "square-free retract", "input")
    sub = verb("retract-q", _commands.retract_q, "retract onto exponents in Q", "input")
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--exponents", metavar="1,3,...", help="comma-separated allowed exponents")
    group.add_argument("--odd", action="store_true", help="allow every odd exponent")
    sub = verb("ik", _commands.ik, "membership in I_k", "input")
    sub.add_argument("--k", type=int, required=True, metavar="K")
    sub = verb("ann-check", _commands.ann_check, "whether f ⊕ e_(p_1...p_K) vanishes", "input")
    sub.add_argument("--k", type=int, required=True, metavar="K")
    verb("endo", _commands.endo, "apply the endomorphism of a gamma table", "input", "gamma")
    verb("basis", _commands.basis, "echelon basis of a generator family", "generators")
    verb("express", _commands.express, "expand a function in a basis", "input", "basis")
    sub = verb("kernel", _commands.kernel, "kernel of convolution by f on 1..M", "input")
    sub.add_argument("--m", type=int, required=True, metavar="M")
    verb("verify-factor", _commands.verify_factor, "verify a factorization", "target", "factors")
    sub = verb("search", _commands.search, "bounded search for two-factor factorizations", "input")
    sub.add_argument("--cap", type=int, required=True, metavar="c")
    sub.add_argument("--coeffs", default="1", metavar="1,-1,2")
    sub.add_argument("--max-support", type=int, default=2, dest="max_support", metavar="s")
    sub = verb("demo-nfg", _commands.demo_nfg, "transcript that e_L is outside (e_2..e_cap)")
    sub.add_argument("--prime", type=int, required=True, metavar="L")
    sub.add_argument("--cap", type=int, required=True, metavar="c")
    return parser
