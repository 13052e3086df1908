"""chaosbox CLI using Typer.

Commands:
- gen-sboxes: Generate the dynamic S-box bank and write it to a bank file
- encrypt / decrypt: Run the image cipher on a binary PGM
- analyze: Entropy, correlation, histogram and NPCR statistics
- apa-table: Print the APA substitution table and its reconciliation report
- sample: Write a synthetic test image (black, gray-strips)

Exit codes: 0 success, 2 invalid input (key file, image, parameters),
3 I/O failure.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from enum import StrEnum
from pathlib import Path
from typing import Annotated, Optional

import typer
from pydantic import ValidationError

from .config import LogFormat, get_settings
from .errors import ChaosboxError
from .field import BitOrder, Convention, computed_table
from .keyfile import load_key
from .imageio import write_pgm
from .pipeline import CipherPipeline, atomic_write
from .samples import DEFAULT_SIDE, sample as build_sample
from .sbox import is_bijective

EXIT_INPUT = 2
EXIT_IO = 3

app = typer.Typer(
    name="chaosbox",
    help="Chaotic dynamic S-box image cipher and cipher-image statistics.",
    add_completion=False,
)


class ConventionChoice(StrEnum):
    AUTO = "auto"
    LSB = "lsb"
    MSB = "msb"


class SampleChoice(StrEnum):
    BLACK = "black"
    GRAY_STRIPS = "gray-strips"


KeyOption = Annotated[Path, typer.Option("--key", "-k", help="Key file (key=value lines)")]
BankOption = Annotated[
    Optional[Path],
    typer.Option("--bank", "-b", help="Pre-built S-box bank file; regenerated from the key if omitted"),
]
OutOption = Annotated[Path, typer.Option("--out", "-o", help="Output file")]


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Translate errors into the documented exit codes."""
    try:
        yield
    except (ChaosboxError, ValidationError) as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(EXIT_INPUT)
    except OSError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(EXIT_IO)


def _pipeline(ctx: typer.Context) -> CipherPipeline:
    if ctx.obj is None:
        ctx.obj = CipherPipeline(get_settings())
    return ctx.obj


@app.callback()
def configure(
    ctx: typer.Context,
    log_level: Annotated[Optional[str], typer.Option("--log-level", help="Log level (DEBUG, INFO, WARNING, ERROR)")] = None,
    log_format: Annotated[Optional[LogFormat], typer.Option("--log-format", help="Log format")] = None,
) -> None:
    """Chaotic dynamic S-box image cipher."""
    if log_level is None and log_format is None:
        return
    with _exit_codes():
        settings = get_settings().with_overrides(log_level=log_level, log_format=log_format)
    ctx.obj = CipherPipeline(settings)


@app.command("gen-sboxes")
def gen_sboxes(ctx: typer.Context, key: KeyOption, out: OutOption) -> None:
    """Generate the S-box bank described by a key file and write it to --out."""
    with _exit_codes():
        pipeline = _pipeline(ctx)
        cipher_key = load_key(key)
        bank = pipeline.build_bank(cipher_key.sbox_params)
        pipeline.save_bank(bank, out)

    valid = sum(is_bijective(box.table) for box in bank.boxes)
    typer.echo(f"bijective boxes: {valid}/{len(bank)}")
    typer.echo(f"Bank written to: {out}")


@app.command()
def encrypt(
    ctx: typer.Context,
    image: Annotated[Path, typer.Argument(help="Plain image (binary PGM)")],
    key: KeyOption,
    out: OutOption,
    bank: BankOption = None,
) -> None:
    """Encrypt a PGM image."""
    with _exit_codes():
        cipher = _pipeline(ctx).encrypt_file(key, image, out, bank)
    typer.echo(f"Encrypted {image} -> {out} ({cipher.width}x{cipher.height})")


@app.command()
def decrypt(
    ctx: typer.Context,
    image: Annotated[Path, typer.Argument(help="Cipher image (binary PGM)")],
    key: KeyOption,
    out: OutOption,
    bank: BankOption = None,
) -> None:
    """Decrypt a PGM image."""
    with _exit_codes():
        plain = _pipeline(ctx).decrypt_file(key, image, out, bank)
    typer.echo(f"Decrypted {image} -> {out} ({plain.width}x{plain.height})")


@app.command()
def analyze(
    ctx: typer.Context,
    image: Annotated[Path, typer.Argument(help="Image to analyze (binary PGM)")],
    second: Annotated[Optional[Path], typer.Argument(help="Second image for NPCR and cross-correlation")] = None,
    kv: Annotated[bool, typer.Option("--kv", help="Print key=value lines instead of the summary")] = False,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Also write key=value lines to this file")] = None,
) -> None:
    """Entropy, adjacent-pixel correlation, histogram uniformity and NPCR."""
    with _exit_codes():
        report = _pipeline(ctx).analyze_files(image, second)
        lines = report.to_lines()
        if out:
            atomic_write(out, ("\n".join(lines) + "\n").encode("utf-8"))

    if kv:
        for line in lines:
            typer.echo(line)
        return

    typer.echo(f"Image: {image} ({report.pixel_count} pixels)")
    typer.echo(f"Entropy:               {report.entropy_bits:.4f} bits")
    typer.echo(f"Correlation (horiz.):  {report.corr_adjacent:.6f}" + (" (degenerate)" if report.corr_degenerate else ""))
    if report.corr_vertical is not None:
        typer.echo(f"Correlation (vert.):   {report.corr_vertical:.6f}")
    if report.corr_diagonal is not None:
        typer.echo(f"Correlation (diag.):   {report.corr_diagonal:.6f}")
    typer.echo(f"Chi-square (df=255):   {report.chi_square:.4f}")
    if report.npcr_percent is not None:
        typer.echo()
        typer.echo(f"Compared with: {second}")
        typer.echo(f"NPCR:                  {report.npcr_percent:.4f} %")
        typer.echo(f"Cross-correlation:     {report.cross_correlation:.6f}")
    if out:
        typer.echo(f"Results written to: {out}")


@app.command("apa-table")
def apa_table(
    ctx: typer.Context,
    convention: Annotated[
        ConventionChoice,
        typer.Option("--convention", "-c", help="Bit order; 'auto' picks the best match to the published table"),
    ] = ConventionChoice.AUTO,
) -> None:
    """Print the APA substitution table (16x16 hex) and the reconciliation report."""
    with _exit_codes():
        report = _pipeline(ctx).apa_report()

    chosen = report.selected
    if convention is not ConventionChoice.AUTO:
        chosen = Convention(bit_order=BitOrder(convention.value))

    table = computed_table(chosen)
    typer.echo(f"# APA table, convention {chosen}")
    for row in table.hex_rows():
        typer.echo(row)
    typer.echo()
    typer.echo("# reconciliation against the published table")
    for line in report.to_lines():
        typer.echo(line)


@app.command()
def sample(
    name: Annotated[SampleChoice, typer.Argument(help="Which synthetic image")],
    out: OutOption,
    height: Annotated[int, typer.Option("--height", min=1, help="Rows")] = DEFAULT_SIDE,
    width: Annotated[int, typer.Option("--width", min=1, help="Columns")] = DEFAULT_SIDE,
) -> None:
    """Write a synthetic test image as a binary PGM."""
    with _exit_codes():
        img = build_sample(name.value, height, width)
        atomic_write(out, write_pgm(img))
    typer.echo(f"Sample {name.value} written to: {out} ({img.width}x{img.height})")


def main() -> None:
    """CLI entry point."""
    app()
