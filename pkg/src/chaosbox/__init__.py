"""chaosbox - chaotic dynamic S-box image encryption.

Generates a bank of PWLCM-shuffled S-boxes, encrypts 8-bit grayscale images
with logistic-map-driven APA substitution chained against keyed Latin
squares, and computes the usual cipher-image statistics.
"""

from .cli import main

__all__ = ["main"]
