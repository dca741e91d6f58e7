#!/usr/bin/env python3
"""Generates frozen NFKC reference vectors for the test suite.

Output format: one case per line, `<src> TAB <expected>` where both sides are
space-separated hexadecimal code points. Expected values come from Python's
unicodedata module, which is generated from the Unicode Character Database.
"""

import random
import unicodedata
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

ARABIC_BLOCKS = [
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
]

BASE_LETTERS = [0x0621, 0x0622, 0x0623, 0x0624, 0x0625, 0x0626, 0x0627,
                0x0628, 0x0629, 0x062A, 0x062B, 0x062C, 0x062D, 0x062E,
                0x062F, 0x0630, 0x0631, 0x0632, 0x0633, 0x0634, 0x0635,
                0x0636, 0x0637, 0x0638, 0x0639, 0x063A, 0x0641, 0x0642,
                0x0643, 0x0644, 0x0645, 0x0646, 0x0647, 0x0648, 0x0649,
                0x064A]
DIACRITICS = [0x064B, 0x064C, 0x064D, 0x064E, 0x064F, 0x0650, 0x0651, 0x0652]
COMBINING_EXTRA = [0x0653, 0x0654, 0x0655, 0x0670]
# Ligature/positional forms only: a few code points in these blocks are
# ordinary symbols with no compatibility decomposition (e.g. the ornate
# parentheses U+FD3E/U+FD3F) and are NFKC-stable by design.
PRESENTATION = [cp for lo, hi in [(0xFB50, 0xFDFF), (0xFE70, 0xFEFF)]
                for cp in range(lo, hi + 1)
                if unicodedata.category(chr(cp)) not in ("Cn", "Co")
                and unicodedata.decomposition(chr(cp))]
EASTERN_DIGITS = list(range(0x0660, 0x066A)) + list(range(0x06F0, 0x06FA))
PUNCT = [0x002E, 0x061F, 0x060C, 0x003F, 0x002C, 0x06D4, 0x003A, 0x002D,
         0x0021, 0x061B, 0x2026]


def fmt(s):
    return " ".join(f"{ord(c):04X}" for c in s)


def case_line(src):
    return f"{fmt(src)}\t{fmt(unicodedata.normalize('NFKC', src))}\n"


def gen_arabic_cases(path):
    with path.open("w") as f:
        for lo, hi in ARABIC_BLOCKS:
            for cp in range(lo, hi + 1):
                c = chr(cp)
                if unicodedata.category(c) in ("Cn", "Co", "Cs"):
                    continue
                f.write(case_line(c))
        # Combining-mark reorderings and compositions on every base letter.
        for base in BASE_LETTERS:
            for d1 in DIACRITICS:
                for d2 in DIACRITICS + COMBINING_EXTRA:
                    if d1 == d2:
                        continue
                    f.write(case_line(chr(base) + chr(d1) + chr(d2)))
            for extra in COMBINING_EXTRA:
                f.write(case_line(chr(base) + chr(extra)))
        # Presentation forms in letter context.
        for pf in PRESENTATION:
            f.write(case_line(chr(0x0628) + chr(pf) + chr(0x0628)))


def gen_fuzz_corpus(path, count=10000, seed=20260823):
    rng = random.Random(seed)
    pool = (BASE_LETTERS * 6 + DIACRITICS * 3 + PRESENTATION +
            EASTERN_DIGITS + PUNCT + [0x0020] * 8 + [0x0640] * 2)
    with path.open("w") as f:
        for _ in range(count):
            n = rng.randint(1, 40)
            s = "".join(chr(rng.choice(pool)) for _ in range(n))
            f.write(case_line(s))


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    gen_arabic_cases(OUT_DIR / "nfkc_arabic_cases.txt")
    gen_fuzz_corpus(OUT_DIR / "nfkc_fuzz_corpus.txt")
    print("wrote", OUT_DIR)


if __name__ == "__main__":
    main()
