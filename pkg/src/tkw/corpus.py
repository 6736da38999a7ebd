"""The shipped example corpus and its expectations.

Corpus files are ``*.gauss`` text files: one ``label: code`` per line, ``#``
comment lines, and ``#! key: value`` lines stating what the next diagram must
satisfy.  Known keys:

``phi2-word``    exact position-based word
``phi2``         reduced ``G''`` element (``1`` for the identity)
``phibar-word``  sign-based word after eliminating ``b'``, ``c'`` and free reduction
``phibar``       same as ``phibar-word``
``abelian``      abelian image of the sign-based word, e.g. ``0 -2 2``
``odd-types``    ``first`` or ``second``: the type of every odd chord
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .g2 import phi2
from .gauss import LinearGaussDiagram, Parity, parse_gauss_code
from .gbar import GBarWord, abelianize, phibar
from .words import letters_phi2, render_word

__all__ = ["CorpusEntry", "load_text", "load_file", "entries", "get", "check"]


@dataclass(frozen=True)
class CorpusEntry:
    source: str
    label: str
    diagram: LinearGaussDiagram
    expect: dict[str, str] = field(default_factory=dict)

    @property
    def ref(self) -> str:
        return f"{self.source}/{self.label}"


def load_text(text: str, source: str = "") -> list[CorpusEntry]:
    out = []
    expect: dict[str, str] = {}
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line.startswith("#!"):
            key, _, value = line[2:].partition(":")
            expect[key.strip()] = value.strip()
            continue
        if not line or line.startswith("#"):
            continue
        if ":" in line:
            label, _, code = line.partition(":")
        else:
            label, code = str(len(out) + 1), line
        try:
            diagram = parse_gauss_code(code)
        except ValueError as exc:
            raise ValueError(f"{source}:{n}: {exc}") from exc
        out.append(CorpusEntry(source, label.strip(), diagram, expect))
        expect = {}
    return out


def load_file(path: str | Path) -> list[CorpusEntry]:
    path = Path(path)
    return load_text(path.read_text(encoding="utf-8"), path.stem)


def entries() -> list[CorpusEntry]:
    """All diagrams of the shipped corpus, in file order."""
    out = []
    root = resources.files("tkw") / "corpus"
    for item in sorted(root.iterdir(), key=lambda p: p.name):
        if item.name.endswith(".gauss"):
            out.extend(load_text(item.read_text(encoding="utf-8"), item.name[:-6]))
    return out


def get(ref: str) -> CorpusEntry:
    """Look up ``"L6a1/K1"`` or, for single-entry files, ``"L7a1"``."""
    source, _, label = ref.partition("/")
    found = [e for e in entries() if e.source == source and (not label or e.label == label)]
    if len(found) != 1:
        raise KeyError(f"no unique corpus entry {ref!r}")
    return found[0]


def check(entry: CorpusEntry) -> list[str]:
    """Return the failed expectations of ``entry`` (empty when all hold)."""
    d = entry.diagram
    failures = []
    for key, want in entry.expect.items():
        if key == "phi2-word":
            got = render_word(letters_phi2(d))
        elif key == "phi2":
            got = str(phi2(d))
        elif key in ("phibar-word", "phibar"):
            got = str(phibar(d))
            want = str(GBarWord.parse(want))
        elif key == "abelian":
            got = " ".join(str(v) for v in abelianize(phibar(d)))
            want = " ".join(want.split())
        elif key == "odd-types":
            types = {c.type.value for c in d.classification if c.parity is Parity.ODD}
            got = " ".join(sorted(types))
        else:
            failures.append(f"{entry.ref}: unknown expectation {key!r}")
            continue
        if got != want:
            failures.append(f"{entry.ref}: {key} is {got!r}, expected {want!r}")
    return failures
