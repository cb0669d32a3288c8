"""One handler per verb; each returns the text to emit."""
from argparse import Namespace
from typing import List

from arithring import algebra, factorization, structure
from arithring._exceptions import BoundMismatchError, DomainError, SerializationError
from arithring.algebra import ArithFunc, get_field
from arithring.data import (
    dumps,
    dumps_basis,
    dumps_blocks,
    dumps_certificate,
    dumps_certificates,
    dumps_decomposition,
    loads_basis,
    loads_gamma_table,
    read_arithfunc,
    read_blocks,
)


def _check(f: ArithFunc, args: Namespace, path: str) -> ArithFunc:
    if f.bound != args.bound or f.field.name != args.field:
        raise BoundMismatchError(
            "{} holds a function at bound={} field={}, expected bound={} field={}".format(
                path, f.bound, f.field.name, args.bound, args.field
            )
        )
    return f


def _read(args: Namespace, path: str) -> ArithFunc:
    return _check(read_arithfunc(path), args, path)


def _read_all(args: Namespace, path: str) -> List[ArithFunc]:
    return [_check(f, args, path) for f in read_blocks(path)]


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _bool(value: bool) -> str:
    return "true\n" if value else "false\n"


def conv(args):
    return dumps(algebra.uconv(_read(args, args.left), _read(args, args.right)))


def dconv(args):
    return dumps(algebra.dconv(_read(args, args.left), _read(args, args.right)))


def associate(args):
    return _bool(factorization.is_associate(_read(args, args.left), _read(args, args.right)))


def inv(args):
    return dumps(algebra.inverse(_read(args, args.input)))


def pow_(args):
    return dumps(algebra.upow(_read(args, args.input), args.exponent))


def mobius(args):
    return dumps(algebra.mobius_star(args.bound, args.field))


def one_(args):
    return dumps(algebra.one(args.bound, args.field))


def indicator(args):
    return dumps(algebra.e(args.index, args.bound, args.field))


def norm_(args):
    value = algebra.norm(_read(args, args.input))
    return "0\n" if value == 0 else algebra.RATIONAL.format(value) + "\n"


def degree_(args):
    return "{}\n".format(algebra.degree(_read(args, args.input)))


def decompose(args):
    return dumps_decomposition(structure.canonical_decompose(_read(args, args.input)))


def filtration(args):
    return "{}\n".format(
        structure.filtration_degree(_read(args, args.input), prime_threshold=args.threshold)
    )


def nilindex(args):
    return "{}\n".format(structure.nilpotency_index(_read(args, args.input), args.max_n))


def retract_sqf_(args):
    return dumps(structure.retract_sqf(_read(args, args.input)))


def _is_odd(a: int) -> bool:
    return a % 2 == 1


def retract_q(args):
    if args.odd:
        allowed = _is_odd
    else:
        try:
            allowed = {int(a) for a in args.exponents.split(",") if a.strip()}
        except ValueError:
            raise SerializationError("--exponents expects comma-separated integers")
    return dumps(structure.retract_Q(_read(args, args.input), allowed))


def ik(args):
    return _bool(structure.in_Ik(_read(args, args.input), args.k))


def ann_check(args):
    return _bool(structure.annihilates_squarefree_block(_read(args, args.input), args.k))


def endo(args):
    table = loads_gamma_table(_read_text(args.gamma), bound=args.bound, field=args.field)
    return dumps(structure.apply_endomorphism(_read(args, args.input), table))


def basis(args):
    generators = _read_all(args, args.generators)
    return dumps_basis(structure.echelon_basis(generators, bound=args.bound, field=args.field))


def express(args):
    f = _read(args, args.input)
    family = loads_basis(_read_text(args.basis), bound=args.bound, field=args.field)
    if family.bound != args.bound or family.field.name != args.field:
        raise BoundMismatchError("{} does not match --bound/--field".format(args.basis))
    result = structure.express_in_basis(f, family)
    if isinstance(result, structure.ResidueNonzero):
        return "residue-nonzero\n" + dumps(result.residue)
    return "".join("{} {}\n".format(k, f.field.format(a)) for k, a in result)


def kernel(args):
    return dumps_blocks(structure.regularity_kernel(_read(args, args.input), args.m))


def verify_factor(args):
    target = _read(args, args.target)
    return dumps_certificate(
        factorization.verify_factorization(target, _read_all(args, args.factors))
    )


def search(args):
    field = get_field(args.field)
    coeffs = [field.parse(c) for c in args.coeffs.split(",") if c.strip()]
    certificates = factorization.atom_search(
        _read(args, args.input),
        args.cap,
        coeffs,
        max_support=args.max_support,
        progress_bar=False,
    )
    return dumps_certificates(certificates)


def demo_nfg(args):
    if args.bound < args.prime:
        raise DomainError("--bound must be at least the prime L={}".format(args.prime))
    transcript = structure.demo_not_finitely_generated(args.prime, args.cap)
    return "\n".join(transcript.lines()) + "\n"

