"""Key files: ``key=value`` lines holding the cipher secret.

Mandatory: x0, lambda, beta, c0, K (64 hex characters). Optional S-box bank
parameters: y0_base, p, n0, zeta, increment, count. Parsing (comments, quotes,
``export`` prefixes) is python-dotenv's; validation is pydantic's.
"""

from io import StringIO
from pathlib import Path
from typing import Any

from dotenv import dotenv_values
from pydantic import ValidationError

from .errors import KeyFileError
from .models import CipherKey, LatinKey, SBoxGenParams

MANDATORY_FIELDS = ("x0", "lambda", "beta", "c0", "K")
SBOX_FIELDS = ("y0_base", "p", "n0", "zeta", "increment", "count")


def _describe(err: ValidationError) -> tuple[str, list[str]]:
    fields = [".".join(str(part) for part in e["loc"]) for e in err.errors()]
    detail = "; ".join(
        f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in err.errors()
    )
    return detail, fields


def key_from_mapping(values: dict[str, Any]) -> CipherKey:
    """Validate a parsed key file mapping into a ``CipherKey``."""
    missing = [name for name in MANDATORY_FIELDS if not values.get(name)]
    if missing:
        raise KeyFileError(f"key file is missing field(s): {', '.join(missing)}", missing)

    sbox = {name: values[name] for name in SBOX_FIELDS if values.get(name)}
    try:
        return CipherKey.model_validate(
            {
                "x0": values["x0"],
                "lambda": values["lambda"],
                "beta": values["beta"],
                "c0": values["c0"],
                "latin_key": LatinKey(key=values["K"]),
                "sbox_params": SBoxGenParams.model_validate(sbox),
            }
        )
    except ValidationError as e:
        detail, fields = _describe(e)
        if e.title == "LatinKey":
            fields = ["K"]
        raise KeyFileError(f"invalid key file: {detail}", fields) from e


def parse_key_text(text: str) -> CipherKey:
    """Parse key file text (``key=value`` lines, ``#`` comments allowed).

    Raises:
        KeyFileError: A field is missing, malformed or out of range.
    """
    return key_from_mapping(dict(dotenv_values(stream=StringIO(text))))


def load_key(path: Path) -> CipherKey:
    """Read and validate a key file; ``OSError`` propagates for I/O problems."""
    text = path.read_text(encoding="utf-8")
    return parse_key_text(text)

