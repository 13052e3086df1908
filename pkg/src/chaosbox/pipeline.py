"""Pipeline orchestrator for chaosbox.

File-level use cases behind the CLI:
1. Build (or load) the S-box bank
2. Encrypt / decrypt a PGM with a key file
3. Analyze one or two PGMs
4. Reconcile the APA table

Every output file is written atomically: inputs are fully parsed and the
result fully computed before a temporary sibling file is renamed over the
target.
"""

import os
import tempfile
from pathlib import Path

from .cipher import decrypt, encrypt
from .config import Settings, get_settings
from .field import ConventionReport, reconcile_convention
from .imageio import read_pgm, write_pgm
from .keyfile import load_key
from .logging import configure_logging, get_logger
from .metrics import analyze
from .models import CipherKey, GrayImage, MetricsReport, SBoxGenParams
from .sbox import SBoxBank, generate_bank, read_bank, write_bank

logger = get_logger(__name__)


def atomic_write(path: Path, data: bytes) -> None:
    """Write ``data`` to ``path`` via a temporary file in the same directory."""
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as tmp:
            tmp.write(data)
            tmp.flush()
            os.fsync(tmp.fileno())
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise


class CipherPipeline:
    """Main orchestrator for chaosbox."""

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()
        configure_logging(
            level=self.settings.log_level,
            format=self.settings.log_format,
        )

    # S-box banks
    def build_bank(self, params: SBoxGenParams) -> SBoxBank:
        """Generate a bank, spread over ``settings.bank_workers`` processes."""
        return generate_bank(params, self.settings.bank_workers)

    def load_bank(self, path: Path) -> SBoxBank:
        bank = read_bank(path.read_bytes())
        logger.info("bank_loaded", path=str(path), count=len(bank))
        return bank

    def save_bank(self, bank: SBoxBank, path: Path) -> None:
        atomic_write(path, write_bank(bank))
        logger.info("bank_written", path=str(path), count=len(bank))

    def bank_for(self, key: CipherKey, bank_path: Path | None = None) -> SBoxBank:
        """Load ``bank_path`` if given, otherwise regenerate from the key's parameters."""
        if bank_path is None:
            return self.build_bank(key.sbox_params)

        bank = self.load_bank(bank_path)
        if len(bank) != key.sbox_params.count:
            logger.warning(
                "bank_count_mismatch",
                path=str(bank_path),
                loaded=len(bank),
                key_count=key.sbox_params.count,
            )
        return bank

    # Images
    def load_image(self, path: Path) -> GrayImage:
        return read_pgm(path.read_bytes())

    def encrypt_file(
        self,
        key_path: Path,
        in_path: Path,
        out_path: Path,
        bank_path: Path | None = None,
    ) -> GrayImage:
        """Encrypt a PGM file with a key file.

        Args:
            key_path: Key file.
            in_path: Plain PGM.
            out_path: Where the cipher PGM is written (atomically).
            bank_path: Optional pre-built bank; regenerated from the key if None.

        Returns:
            The cipher image.
        """
        key = load_key(key_path)
        plain = self.load_image(in_path)
        bank = self.bank_for(key, bank_path)

        logger.info(
            "encrypt_start",
            input=str(in_path),
            height=plain.height,
            width=plain.width,
            rounds=key.beta,
        )
        cipher = encrypt(plain, key, bank)
        atomic_write(out_path, write_pgm(cipher))
        logger.info("encrypt_complete", output=str(out_path))
        return cipher

    def decrypt_file(
        self,
        key_path: Path,
        in_path: Path,
        out_path: Path,
        bank_path: Path | None = None,
    ) -> GrayImage:
        key = load_key(key_path)
        cipher = self.load_image(in_path)
        bank = self.bank_for(key, bank_path)

        logger.info(
            "decrypt_start",
            input=str(in_path),
            height=cipher.height,
            width=cipher.width,
            rounds=key.beta,
        )
        plain = decrypt(cipher, key, bank)
        atomic_write(out_path, write_pgm(plain))
        logger.info("decrypt_complete", output=str(out_path))
        return plain

    def analyze_files(self, path: Path, other: Path | None = None) -> MetricsReport:
        """Report for ``path``; NPCR and cross-correlation against ``other`` if given."""
        img = self.load_image(path)
        second = self.load_image(other) if other is not None else None
        return analyze(img, second)

    def apa_report(self) -> ConventionReport:
        report = reconcile_convention()
        logger.info(
            "apa_reconciled",
            selected=str(report.selected),
            agreement=report.agreement,
            duplicated=len(report.duplicated_values),
        )
        return report
