"""File formats: tables, named sets, triple files, bundles, queries.

Table files are tab separated. The first line is ``#table <name>``, the
second a header whose first cell is the literal ``id`` followed by
attribute names, and each further line an object id followed by one cell
per attribute. A cell is a bare atom, or a braced set like ``{a,b}``
(``{}`` for no values) in the set-valued variant. Bare and braced cells
may mix; a bare cell is a singleton.

Named-set files hold one set per line: ``name<TAB>sort<TAB>id1,id2,...``
with sort one of A, O, E and an empty member list allowed. Triple files
start with ``#phi <label>`` (the label is optional) followed by
``actor<TAB>object<TAB>environment`` lines.

A bundle is either a directory holding actors.tsv, objects.tsv,
environments.tsv, phi.tsv, and optionally sets.tsv, or a JSON manifest
with keys actors, objects, environments, phi, and optionally sets, whose
paths resolve relative to the manifest's directory.

Lines that are blank or start with ``#`` (other than the two headers)
are skipped everywhere. Re-emission preserves input order; triples are
written in table order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from hashlib import sha256
from pathlib import Path
from typing import Mapping

from .affordance import AffordanceStructure, Sort, Triple
from .errors import LoadError
from .systems import ASystem, Atom, AttributeTable, to_attribute_table

TABLE_HEADER = "#table"
PHI_HEADER = "#phi"

_BUNDLE_FILES = {
    "actors": "actors.tsv",
    "objects": "objects.tsv",
    "environments": "environments.tsv",
    "phi": "phi.tsv",
    "sets": "sets.tsv",
}


@dataclass(frozen=True)
class NamedSet:
    name: str
    sort: Sort
    members: frozenset[str]


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as err:
        raise LoadError(f"{path}: {err}") from None


def _content_lines(text: str, path: Path, keep_header: str | None = None):
    """Pairs of (1-based line number, stripped line), comments dropped.

    A leading header line (``#table`` or ``#phi``) is kept when asked
    for; every other line starting with ``#`` is a comment.
    """
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if keep_header and line.split("\t")[0].split(" ")[0] == keep_header \
                    and not out:
                out.append((number, line))
            continue
        out.append((number, raw))
    if not out:
        raise LoadError(f"{path}: empty file")
    return out


def _parse_cell(cell: str, where: str) -> tuple[Atom, ...]:
    cell = cell.strip()
    if cell.startswith("{"):
        if not cell.endswith("}"):
            raise LoadError(f"{where}: unterminated braced cell {cell!r}")
        inner = cell[1:-1].strip()
        if not inner:
            return ()
        atoms = []
        for token in inner.split(","):
            token = token.strip()
            if not token:
                raise LoadError(f"{where}: empty atom in braced cell {cell!r}")
            if token not in atoms:
                atoms.append(token)
        return tuple(atoms)
    if not cell:
        raise LoadError(f"{where}: empty cell (use {{}} for no values)")
    return (cell,)


def read_asystem(path: str | Path) -> ASystem:
    """Parse a table file without collapsing set-valued cells."""
    path = Path(path)
    lines = _content_lines(_read_text(path), path, keep_header=TABLE_HEADER)
    number, header = lines[0]
    if not header.startswith(TABLE_HEADER):
        raise LoadError(f"{path}:{number}: expected '{TABLE_HEADER} <name>' first")
    name = header[len(TABLE_HEADER):].strip()
    if not name:
        raise LoadError(f"{path}:{number}: table name missing")
    if len(lines) < 2:
        raise LoadError(f"{path}: missing column header line")
    number, column_line = lines[1]
    columns = [c.strip() for c in column_line.split("\t")]
    if columns[0] != "id":
        raise LoadError(f"{path}:{number}: first header cell must be 'id'")
    attributes = tuple(columns[1:])
    objects = []
    cells: dict[tuple[str, str], tuple[Atom, ...]] = {}
    for number, row in lines[2:]:
        fields = row.split("\t")
        if len(fields) != 1 + len(attributes):
            raise LoadError(
                f"{path}:{number}: expected {1 + len(attributes)} cells, "
                f"got {len(fields)}"
            )
        object_id = fields[0].strip()
        if not object_id:
            raise LoadError(f"{path}:{number}: empty object id")
        objects.append(object_id)
        for attribute, cell in zip(attributes, fields[1:]):
            cells[(object_id, attribute)] = _parse_cell(
                cell, f"{path}:{number}")
    try:
        return ASystem(name, tuple(objects), attributes, cells)
    except LoadError as err:
        raise LoadError(f"{path}: {err}") from None


def read_attribute_table(path: str | Path) -> AttributeTable:
    """Parse a table file and require exactly one atom per cell."""
    return to_attribute_table(read_asystem(path))


def write_table(table: AttributeTable | ASystem) -> str:
    """Canonical text for a table, preserving stored order."""
    lines = [f"{TABLE_HEADER} {table.name}",
             "\t".join(("id",) + table.attributes)]
    if isinstance(table, AttributeTable):
        for x in table.objects:
            lines.append("\t".join((x,) + table.rows[x]))
    else:
        for x in table.objects:
            cells = ("{" + ",".join(table.cells[(x, a)]) + "}"
                     for a in table.attributes)
            lines.append("\t".join((x,) + tuple(cells)))
    return "\n".join(lines) + "\n"


def read_named_sets(path: str | Path,
                    structure: AffordanceStructure | None = None
                    ) -> dict[str, NamedSet]:
    """Parse a named-set file, validating members against a structure."""
    path = Path(path)
    out: dict[str, NamedSet] = {}
    for number, row in _content_lines(_read_text(path), path):
        fields = row.split("\t")
        if len(fields) != 3:
            raise LoadError(f"{path}:{number}: expected 3 fields, got {len(fields)}")
        name = fields[0].strip()
        sort_text = fields[1].strip()
        if not name:
            raise LoadError(f"{path}:{number}: empty set name")
        if name in out:
            raise LoadError(f"{path}:{number}: duplicate set name {name!r}")
        try:
            sort = Sort(sort_text)
        except ValueError:
            raise LoadError(
                f"{path}:{number}: sort must be A, O, or E, got {sort_text!r}"
            ) from None
        members = frozenset(
            token.strip() for token in fields[2].split(",") if token.strip()
        )
        if structure is not None:
            known = structure.table(sort).rows
            for member in sorted(members):
                if member not in known:
                    raise LoadError(
                        f"{path}:{number}: {member!r} is not an id of sort "
                        f"{sort.value}"
                    )
        out[name] = NamedSet(name, sort, members)
    return out


def read_phi(path: str | Path) -> tuple[str | None, list[tuple[int, Triple]]]:
    """Parse a triple file into its label and numbered triples."""
    path = Path(path)
    lines = _content_lines(_read_text(path), path, keep_header=PHI_HEADER)
    number, header = lines[0]
    if not header.startswith(PHI_HEADER):
        raise LoadError(f"{path}:{number}: expected '{PHI_HEADER} <label>' first")
    label = header[len(PHI_HEADER):].strip() or None
    triples = []
    for number, row in lines[1:]:
        fields = [f.strip() for f in row.split("\t")]
        if len(fields) != 3 or not all(fields):
            raise LoadError(f"{path}:{number}: expected 3 ids, got {row!r}")
        triples.append((number, Triple(*fields)))
    return label, triples


def _bundle_paths(manifest: str | Path) -> dict[str, Path | None]:
    manifest = Path(manifest)
    if manifest.is_dir():
        paths = {key: manifest / name for key, name in _BUNDLE_FILES.items()}
        if not paths["sets"].exists():
            paths["sets"] = None
        return paths
    try:
        raw = json.loads(_read_text(manifest))
    except json.JSONDecodeError as err:
        raise LoadError(f"{manifest}: not a directory or JSON manifest: {err}") \
            from None
    if not isinstance(raw, dict):
        raise LoadError(f"{manifest}: manifest must be a JSON object")
    paths = {}
    for key in ("actors", "objects", "environments", "phi"):
        if key not in raw:
            raise LoadError(f"{manifest}: manifest key {key!r} missing")
        paths[key] = manifest.parent / raw[key]
    paths["sets"] = manifest.parent / raw["sets"] if "sets" in raw else None
    return paths


def load_structure(manifest: str | Path
                   ) -> tuple[AffordanceStructure, dict[str, NamedSet]]:
    """Load a bundle: three tables, a triple file, optional named sets."""
    paths = _bundle_paths(manifest)
    for key in ("actors", "objects", "environments", "phi"):
        if not paths[key].exists():
            raise LoadError(f"{paths[key]}: bundle file missing")
    actors = read_attribute_table(paths["actors"])
    objects = read_attribute_table(paths["objects"])
    environments = read_attribute_table(paths["environments"])
    label, numbered = read_phi(paths["phi"])
    tables = {"actor": actors, "object": objects, "environment": environments}
    for number, triple in numbered:
        for kind, value in zip(tables, triple):
            if value not in tables[kind].rows:
                raise LoadError(
                    f"{paths['phi']}:{number}: unknown {kind} id {value!r} in "
                    f"triple {tuple(triple)}"
                )
    structure = AffordanceStructure(
        actors, objects, environments, (t for _, t in numbered), label)
    sets: dict[str, NamedSet] = {}
    if paths["sets"] is not None and paths["sets"].exists():
        sets = read_named_sets(paths["sets"], structure)
    return structure, sets


def write_phi(structure: AffordanceStructure) -> str:
    """Canonical text for the triple file, triples in table order."""
    label = f" {structure.action_label}" if structure.action_label else ""
    lines = [f"{PHI_HEADER}{label}"]
    pos_a = structure.actors.partition.position
    pos_o = structure.objects.partition.position
    pos_e = structure.environments.partition.position
    for t in sorted(structure.phi,
                    key=lambda t: (pos_a[t.a], pos_o[t.o], pos_e[t.e])):
        lines.append("\t".join(t))
    return "\n".join(lines) + "\n"


def serialize_structure(structure: AffordanceStructure) -> str:
    """One canonical text stream for the whole bundle."""
    return "".join((
        write_table(structure.actors),
        write_table(structure.objects),
        write_table(structure.environments),
        write_phi(structure),
    ))


def structure_digest(structure: AffordanceStructure) -> str:
    """A short stable digest of the canonical serialization."""
    return sha256(serialize_structure(structure).encode()).hexdigest()[:12]


def write_bundle(structure: AffordanceStructure, directory: str | Path,
                 sets: Mapping[str, NamedSet] | None = None) -> None:
    """Write a bundle directory, including a JSON manifest."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "actors.tsv").write_text(write_table(structure.actors))
    (directory / "objects.tsv").write_text(write_table(structure.objects))
    (directory / "environments.tsv").write_text(write_table(structure.environments))
    (directory / "phi.tsv").write_text(write_phi(structure))
    manifest = {key: name for key, name in _BUNDLE_FILES.items() if key != "sets"}
    if sets:
        lines = []
        for named in sets.values():
            table = structure.table(named.sort)
            members = sorted(named.members, key=table.partition.position.__getitem__)
            lines.append(f"{named.name}\t{named.sort.value}\t{','.join(members)}")
        (directory / "sets.tsv").write_text("\n".join(lines) + "\n")
        manifest["sets"] = _BUNDLE_FILES["sets"]
    (directory / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


def read_query_file(path: str | Path) -> list[tuple[int, str]]:
    """Queries from a file, one per line, with their line numbers."""
    path = Path(path)
    out = []
    for number, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((number, raw))
    return out
