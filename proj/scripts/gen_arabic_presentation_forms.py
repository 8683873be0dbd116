#!/usr/bin/env python3
"""Regenerates include/armt/detail/presentation_forms.inc.

Emits the compatibility decompositions for the Arabic Presentation Forms
blocks (U+FB50..U+FEFF) as a sorted C++ table. Isolated diacritic forms
decompose in Unicode to U+0020 + mark; the space carrier is dropped so the
output stays within letters, diacritics, and the phrase ligatures' own
spacing.

Usage: python3 scripts/gen_arabic_presentation_forms.py > \
    include/armt/detail/presentation_forms.inc
"""

import sys
import unicodedata


def main() -> None:
    entries = []
    for cp in range(0xFB50, 0xFF00):
        ch = chr(cp)
        if not unicodedata.decomposition(ch):
            continue
        decomposed = unicodedata.normalize("NFKD", ch)
        # Drop the U+0020 carrier that isolated combining-mark forms use.
        if len(decomposed) >= 2 and decomposed[0] == " ":
            decomposed = decomposed[1:]
        entries.append((cp, decomposed))

    out = sys.stdout
    out.write("// Generated by scripts/gen_arabic_presentation_forms.py --\n")
    out.write("// do not edit by hand.\n")
    out.write("// clang-format off\n")
    total = sum(len(d) for _, d in entries)
    out.write(f"inline constexpr char32_t kPresentationFormText[{total}] = {{\n")
    offsets = []
    pos = 0
    line = []
    for _, decomposed in entries:
        offsets.append((pos, len(decomposed)))
        for ch in decomposed:
            line.append(f"0x{ord(ch):04X}")
            if len(line) == 10:
                out.write("    " + ", ".join(line) + ",\n")
                line = []
        pos += len(decomposed)
    if line:
        out.write("    " + ", ".join(line) + ",\n")
    out.write("};\n\n")
    out.write("struct PresentationForm {\n")
    out.write("  char32_t form;\n")
    out.write("  std::uint16_t offset;\n")
    out.write("  std::uint8_t length;\n")
    out.write("};\n\n")
    out.write(
        f"inline constexpr PresentationForm kPresentationForms[{len(entries)}] = {{\n"
    )
    for (cp, _), (offset, length) in zip(entries, offsets):
        out.write(f"    {{0x{cp:04X}, {offset}, {length}}},\n")
    out.write("};\n")
    out.write("// clang-format on\n")


if __name__ == "__main__":
    main()
