"""Command-line interface for symdecomp.

Provides commands for decomposing polynomials, verifying the structure theorem,
and inspecting modules, reduced forms, leading sets and elementary symmetric
polynomials.

Exit codes: 0 success, 1 verification failure or internal error, 2 bad input.
"""

from __future__ import annotations

import functools
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import click

from symdecomp import __version__
from symdecomp.decompose import decompose, recompose, render_decomposition
from symdecomp.domains import get_domain
from symdecomp.errors import ArgumentError, DimensionError, InvariantViolation, SymDecompError
from symdecomp.formats import (
    decomposition_to_dict,
    load_json,
    permutation_to_dict,
    polynomial_from_dict,
    polynomial_to_dict,
    to_json,
)
from symdecomp.oracle import DEFAULT_SEED, VerifyOptions, dn_shift_audit, run_verification
from symdecomp.ordering import glm
from symdecomp.parser import (
    parse_index_set,
    parse_permutation,
    parse_polynomial,
    render_polynomial,
)
from symdecomp.permutations import MAX_FULL_GROUP_N, apply_poly, stabilizer_order, transversal
from symdecomp.poly import Polynomial, elementary_symmetric
from symdecomp.reduction import classify_reduced, reduce
from symdecomp.structure import (
    GeneratorSpec,
    IndexSet,
    e_double_prime,
    e_prime,
    index_sets,
    module_dimension,
    validate_generator,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


@dataclass
class CliConfig:
    """Everything a subcommand needs, collected from the command line."""

    command: str
    n: int
    max_degree: int = 8
    seed: int = DEFAULT_SEED
    trials: int = 100
    expr: str | None = None
    input_path: str | None = None
    output_format: str = "text"
    parallel_jobs: int = 1
    domain: str = "ZZ"
    generators: tuple[str, ...] = ()
    index: int | None = None
    act: str | None = None

    def validate(self) -> None:
        if self.n < 1:
            raise ArgumentError(f"--n must be at least 1, got {self.n}")
        if self.max_degree < 0:
            raise ArgumentError(f"--max-degree must be non-negative, got {self.max_degree}")


def exit_codes(func: Callable[[CliConfig], int]) -> Callable[[CliConfig], int]:
    """Map exceptions to the exit-code contract and report them on stderr."""

    @functools.wraps(func)
    def wrapper(config: CliConfig) -> int:
        try:
            config.validate()
            return func(config)
        except SymDecompError as e:
            click.echo(f"Error: {e}", err=True)
            return EXIT_USAGE
        except click.UsageError as e:
            click.echo(f"Error: {e.format_message()}", err=True)
            return EXIT_USAGE
        except OSError as e:
            click.echo(f"Error: {e}", err=True)
            return EXIT_USAGE
        except InvariantViolation as e:
            click.echo(f"Internal error: {e}", err=True)
            return EXIT_FAILURE

    return wrapper


def _read_source(config: CliConfig) -> str:
    if config.expr is not None and config.input_path is not None:
        raise click.UsageError("Give either EXPR or --input, not both")
    if config.expr is not None:
        return config.expr
    if config.input_path == "-":
        return click.get_text_stream("stdin").read()
    if config.input_path:
        return Path(config.input_path).read_text(encoding="utf-8")
    raise click.UsageError("Missing EXPR (or --input FILE|-)")


def _read_polynomial(config: CliConfig) -> Polynomial:
    """Read text or polynomial JSON from EXPR, a file, or stdin, then apply --act."""
    source = _read_source(config)
    domain = get_domain(config.domain)
    if source.lstrip().startswith("{"):
        u = polynomial_from_dict(load_json(source))
        if u.n != config.n:
            raise DimensionError(u.n, config.n, "--n against the polynomial JSON")
        if u.domain is not domain:
            u = u.change_domain(domain)
    else:
        u = parse_polynomial(source.strip(), config.n, domain)
    if config.act is not None:
        u = apply_poly(parse_permutation(config.act, config.n), u)
    return u


def _parse_generator_option(text: str, n: int, domain_name: str) -> GeneratorSpec:
    """``I=1,2,3:x1^2*x2 + x1*x2*x3``."""
    head, sep, body = text.partition(":")
    if not sep or not head.strip().startswith("I="):
        raise click.UsageError(f"--generator expects 'I=<indices>:<polynomial>', got {text!r}")
    index_set = parse_index_set(head.strip()[2:], n)
    candidate = parse_polynomial(body.strip(), n, get_domain(domain_name))
    return validate_generator(candidate, index_set)


def _emit(config: CliConfig, text: str, data: dict[str, Any]) -> None:
    if config.output_format == "json":
        click.echo(to_json(data))
    else:
        click.echo(text)


@exit_codes
def cmd_decompose(config: CliConfig) -> int:
    u = _read_polynomial(config)
    generators: dict[IndexSet, GeneratorSpec] = {}
    for option in config.generators:
        spec = _parse_generator_option(option, config.n, config.domain)
        generators[spec.index_set] = spec

    decomposition = decompose(u, generators)
    if recompose(decomposition) != u:
        click.echo("Error: decomposition does not recompose to the input", err=True)
        return EXIT_FAILURE

    data = decomposition_to_dict(decomposition)
    if config.output_format == "json":
        click.echo(to_json(data))
    else:
        click.echo(render_decomposition(decomposition))
        click.echo(to_json(data))
    return EXIT_OK


@exit_codes
def cmd_verify(config: CliConfig) -> int:
    options = VerifyOptions(
        n=config.n,
        max_degree=config.max_degree,
        trials=config.trials,
        seed=config.seed,
        parallel_jobs=config.parallel_jobs,
    )
    report = run_verification(options)
    _emit(config, str(report), report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILURE


@exit_codes
def cmd_modules(config: CliConfig) -> int:
    if config.n > MAX_FULL_GROUP_N:
        raise ArgumentError(f"modules lists transversals only up to n={MAX_FULL_GROUP_N}")
    rows = []
    for index_set in index_sets(config.n):
        leading = e_prime(index_set)
        rows.append(
            {
                "I": list(index_set.members),
                "e_prime": str(leading),
                "e_double_prime": str(e_double_prime(config.n, index_set.members)),
                "dim": module_dimension(index_set),
                "stabilizer_order": stabilizer_order(leading),
                "transversal_size": len(transversal(leading)),
            }
        )
    shift = dn_shift_audit(config.n)

    header = f"{'I':<16} {'e′':<16} {'dim':>6} {'|stab|':>8} {'|T|':>6}  e″"
    lines = [header, "-" * len(header)]
    for row, index_set in zip(rows, index_sets(config.n)):
        lines.append(
            f"{str(index_set):<16} {row['e_prime']:<16} {row['dim']:>6} "
            f"{row['stabilizer_order']:>8} {row['transversal_size']:>6}  {row['e_double_prime']}"
        )
    lines.append("")
    lines.append(str(shift))
    _emit(config, "\n".join(lines), {"n": config.n, "modules": rows, "dn_shift": shift.to_dict()})
    return EXIT_OK if shift.passed else EXIT_FAILURE


@exit_codes
def cmd_reduce(config: CliConfig) -> int:
    u = _read_polynomial(config)
    if len(u) != 1 or u.leading_coefficient() != u.domain.one:
        raise ArgumentError(f"reduce expects a single monomial, got {u}")
    m = u.lmlex()
    reduced = reduce(m)
    classification = classify_reduced(reduced)
    text = f"{reduced}\n{classification}"
    data = {
        "monomial": list(m.exps),
        "reduced": list(reduced.exps),
        "g": permutation_to_dict(classification.g),
        "I": list(classification.index_set.members),
    }
    _emit(config, text, data)
    return EXIT_OK


@exit_codes
def cmd_glm(config: CliConfig) -> int:
    u = _read_polynomial(config)
    leading = glm(u)
    text = "{" + ", ".join(str(m) for m in leading) + "}"
    _emit(config, text, {"n": config.n, "glm": [list(m.exps) for m in leading]})
    return EXIT_OK


@exit_codes
def cmd_es(config: CliConfig) -> int:
    domain = get_domain(config.domain)
    indices = [config.index] if config.index is not None else range(1, config.n + 1)
    expansions = [(i, elementary_symmetric(config.n, i, domain)) for i in indices]
    text = "\n".join(f"d{i} = {render_polynomial(d)}" for i, d in expansions)
    data = {"n": config.n, "d": {str(i): polynomial_to_dict(d) for i, d in expansions}}
    _emit(config, text, data)
    return EXIT_OK


def common_options(func: Callable) -> Callable:
    """Options shared by every subcommand."""
    options = [
        click.option("--n", "n", type=int, required=True, help="Number of variables"),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(["text", "json"]),
            default="text",
            help="Output format (default: text)",
        ),
        click.option(
            "--domain",
            type=click.Choice(["ZZ", "QQ"]),
            default="ZZ",
            help="Coefficient domain (default: ZZ)",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def input_options(func: Callable) -> Callable:
    """EXPR argument, --input and --act for commands that read a polynomial."""
    func = click.option(
        "--act",
        type=str,
        help="Apply a permutation in cycle notation to the input first, e.g. '(1 2)(3 4)'",
    )(func)
    func = click.option(
        "--input",
        "input_path",
        type=str,
        help="Read the polynomial (text or JSON) from a file, or '-' for stdin",
    )(func)
    return click.argument("expr", required=False)(func)


@click.group()
@click.version_option(version=__version__, prog_name="symdecomp")
@click.option("-v", "--verbose", count=True, help="Log more (-v info, -vv debug)")
def main(verbose: int) -> None:
    """Exact decomposition of polynomial rings under the symmetric group.

    Writes every polynomial in x1..xn uniquely as a sum of products r·v, with r a
    polynomial in elementary symmetric polynomials and v in one of the modules V_I.
    """
    logging.basicConfig(
        stream=sys.stderr,
        level=LOG_LEVELS.get(verbose, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command(name="decompose")
@common_options
@input_options
@click.option(
    "--generator",
    "generators",
    multiple=True,
    help="Use a non-default generator, e.g. 'I=1,2,3:x1^2*x2 + x1*x2*x3' (repeatable)",
)
def decompose_cmd(
    n: int,
    output_format: str,
    domain: str,
    expr: str | None,
    input_path: str | None,
    act: str | None,
    generators: tuple[str, ...],
) -> None:
    """Decompose a polynomial into Σ r ⊗ v.

    Examples:

        # Text rendering followed by JSON
        symdecomp decompose --n 2 "x1^2"

        # JSON only, from a file
        symdecomp decompose --n 3 --input poly.json --format json

        # Act with a permutation first
        symdecomp decompose --n 3 --act "(1 3)" "x1^2*x2"
    """
    sys.exit(
        cmd_decompose(
            CliConfig(
                "decompose",
                n,
                expr=expr,
                input_path=input_path,
                act=act,
                output_format=output_format,
                domain=domain,
                generators=generators,
            )
        )
    )


@main.command(name="verify")
@click.option("--n", "n", type=int, required=True, help="Number of variables")
@click.option("--max-degree", type=int, default=8, help="Highest degree checked (default: 8)")
@click.option("--seed", type=int, default=DEFAULT_SEED, help="Seed for the round-trip suite")
@click.option("--trials", type=int, default=100, help="Round-trip trials (default: 100)")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="json",
    help="Output format (default: json)",
)
@click.option(
    "--parallel",
    "-j",
    "parallel_jobs",
    type=int,
    default=1,
    help="Number of worker processes for the graded checks (default: 1)",
)
def verify_cmd(
    n: int, max_degree: int, seed: int, trials: int, output_format: str, parallel_jobs: int
) -> None:
    """Check the structure theorem degree by degree.

    Runs the graded basis check, the Hilbert series comparison, the dimension and
    d_n shift audits, and the round-trip suite. Exits 1 if anything fails.

    Examples:

        symdecomp verify --n 3 --max-degree 8
        symdecomp verify --n 4 --max-degree 10 -j 4 --seed 7
    """
    sys.exit(
        cmd_verify(
            CliConfig(
                "verify",
                n,
                max_degree=max_degree,
                seed=seed,
                trials=trials,
                output_format=output_format,
                parallel_jobs=parallel_jobs,
            )
        )
    )


@main.command(name="modules")
@click.option("--n", "n", type=int, required=True, help="Number of variables")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format (default: text)",
)
def modules_cmd(n: int, output_format: str) -> None:
    """List e_I′, dim V_I and stabilizer data for every I ∋ n."""
    sys.exit(cmd_modules(CliConfig("modules", n, output_format=output_format)))


@main.command(name="reduce")
@common_options
@input_options
def reduce_cmd(
    n: int,
    output_format: str,
    domain: str,
    expr: str | None,
    input_path: str | None,
    act: str | None,
) -> None:
    """Print Red(m) for a monomial m and write it as g·e_I′."""
    sys.exit(
        cmd_reduce(
            CliConfig(
                "reduce",
                n,
                expr=expr,
                input_path=input_path,
                act=act,
                output_format=output_format,
                domain=domain,
            )
        )
    )


@main.command(name="glm")
@common_options
@input_options
def glm_cmd(
    n: int,
    output_format: str,
    domain: str,
    expr: str | None,
    input_path: str | None,
    act: str | None,
) -> None:
    """Print the leading set Glm(u)."""
    sys.exit(
        cmd_glm(
            CliConfig(
                "glm",
                n,
                expr=expr,
                input_path=input_path,
                act=act,
                output_format=output_format,
                domain=domain,
            )
        )
    )


@main.command(name="es")
@common_options
@click.option("--i", "index", type=int, help="Only d_i (default: all of d_1..d_n)")
def es_cmd(n: int, output_format: str, domain: str, index: int | None) -> None:
    """Expand elementary symmetric polynomials."""
    sys.exit(
        cmd_es(CliConfig("es", n, output_format=output_format, domain=domain, index=index))
    )


if __name__ == "__main__":
    main()
