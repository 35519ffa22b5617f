"""Print the GF(4) worked example and check it against the committed golden file."""

import sys
from pathlib import Path

from lfeq.cli import reproduce_gf4

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden" / "reproduce_gf4.txt"


def main() -> int:
    text, _ = reproduce_gf4()
    print(text)
    same = GOLDEN.read_text() == text + "\n"
    print(f"\ngolden file match: {same}", file=sys.stderr)
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
