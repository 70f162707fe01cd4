from pathlib import Path
from typing import List

HERE = Path(__file__).parent
GOLDENS = HERE / "goldens"


def goldens():
    return sorted(f.stem for f in GOLDENS.glob("*.txt"))


def _lines(name: str) -> List[str]:
    text = (GOLDENS / f"{name}.txt").read_text(encoding="utf-8")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and ln[0] != "#"]


def read_golden(name: str) -> str:
    """Polynomials are stored as their ``str()``, wrapped over several lines"""
    return " ".join(_lines(name))


def read_golden_matrix(name: str) -> List[List[str]]:
    """One row per line, entries separated by ``;``"""
    return [[entry.strip() for entry in ln.split(";")] for ln in _lines(name)]
