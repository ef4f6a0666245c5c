"""The two lockstep output documents: the semantic map and the block map.

Both are UTF-8 JSON with schema_version "1"; the field-by-field contract
lives in docs/file-formats.md. Writers are canonical: keys appear in a fixed
order, every list is sorted (locations/connections/entities/objects by id,
blocks by coordinates then material, entity rows by coordinates then type),
line endings are "\n", and output is ASCII. Writing what you just read
reproduces the file byte for byte.

Readers validate referential integrity and raise ParseError (malformed JSON,
with line/column) or ValidationError (schema or integrity violation, naming
the offending id).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union

from .errors import ParseError, ValidationError
from .geometry import EQUIPMENT_SLOTS, Position, WorldModel
from .raster import BlockGrid

SCHEMA_VERSION = "1"

PathLike = Union[str, Path]


@dataclass(frozen=True)
class LocationRecord:
    id: str
    location_type: str
    material: str
    top_left: Position
    bottom_right: Position
    child_ids: tuple[str, ...]


@dataclass(frozen=True)
class ConnectionRecord:
    id: str
    connection_type: str
    top_left: Position
    bottom_right: Position
    connected_ids: tuple[str, ...]


@dataclass(frozen=True)
class EntityRecord:
    id: str
    entity_type: str
    position: Position
    location_id: Optional[str]
    equipment: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class ObjectRecord:
    id: str
    object_type: str
    material: str
    position: Position
    location_id: Optional[str]


@dataclass(frozen=True)
class SemanticMap:
    """The high-level document: named locations, hierarchy, connections, items."""

    id: str
    locations: tuple[LocationRecord, ...] = ()
    connections: tuple[ConnectionRecord, ...] = ()
    entities: tuple[EntityRecord, ...] = ()
    objects: tuple[ObjectRecord, ...] = ()


@dataclass(frozen=True)
class BlockRecord:
    material: str
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class BlockEntityRecord:
    entity_type: str
    x: int
    y: int
    z: int
    equipment: tuple[tuple[str, str], ...] = ()


@dataclass
class BlockMapDocument:
    """The low-level document: every block and entity in the flattened world."""

    blocks: list[BlockRecord] = field(default_factory=list)
    entities: list[BlockEntityRecord] = field(default_factory=list)


# -- building documents from in-memory worlds -------------------------------


def _equipment_items(equipment) -> tuple[tuple[str, str], ...]:
    if not equipment:
        return ()
    return tuple(sorted(equipment.items()))


def semantic_map_from_world(world: WorldModel) -> SemanticMap:
    """Project a finalized world onto its semantic-map document."""
    locations = []
    entities = []
    objects = []
    connections = []

    def visit(volume, _parent_id):
        locations.append(
            LocationRecord(
                id=volume.id,
                location_type=volume.volume_type,
                material=volume.material,
                top_left=volume.top_left,
                bottom_right=volume.bottom_right,
                child_ids=tuple(sorted(c.id for c in volume.children)),
            )
        )
        for e in volume.entities:
            entities.append(
                EntityRecord(e.id, e.entity_type, e.position, volume.id, _equipment_items(e.equipment))
            )
        for o in volume.objects:
            objects.append(ObjectRecord(o.id, o.object_type, o.block.material, o.block.position, volume.id))
        for c in volume.connections:
            connections.append(
                ConnectionRecord(c.id, c.connection_type, c.bounds[0], c.bounds[1],
                                 tuple(sorted(c.connected_ids)))
            )
        for child in volume.children:
            visit(child, volume.id)

    for v in world.volumes:
        visit(v, None)
    for e in world.entities:
        entities.append(EntityRecord(e.id, e.entity_type, e.position, None, _equipment_items(e.equipment)))
    for o in world.objects:
        objects.append(ObjectRecord(o.id, o.object_type, o.block.material, o.block.position, None))
    for c in world.connections:
        connections.append(
            ConnectionRecord(c.id, c.connection_type, c.bounds[0], c.bounds[1], tuple(sorted(c.connected_ids)))
        )

    return SemanticMap(
        id=world.id,
        locations=tuple(sorted(locations, key=lambda r: r.id)),
        connections=tuple(sorted(connections, key=lambda r: r.id)),
        entities=tuple(sorted(entities, key=lambda r: r.id)),
        objects=tuple(sorted(objects, key=lambda r: r.id)),
    )


def block_map_from_grid(grid: BlockGrid) -> BlockMapDocument:
    """Project a block grid onto its block-map document."""
    blocks = [BlockRecord(material, p.x, p.y, p.z) for p, material in grid.cells.items()]
    blocks.sort(key=lambda b: (b.x, b.y, b.z, b.material))
    entities = [
        BlockEntityRecord(e.entity_type, e.position.x, e.position.y, e.position.z, _equipment_items(e.equipment))
        for e in grid.entities
    ]
    entities.sort(key=lambda e: (e.x, e.y, e.z, e.entity_type, e.equipment))
    return BlockMapDocument(blocks=blocks, entities=entities)


# -- canonical JSON writing --------------------------------------------------


def _pos_json(p: Position) -> list[int]:
    return [p.x, p.y, p.z]


def _semantic_map_json(m: SemanticMap) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "id": m.id,
        "locations": [
            {
                "id": r.id,
                "type": r.location_type,
                "material": r.material,
                "bounds": {"top_left": _pos_json(r.top_left), "bottom_right": _pos_json(r.bottom_right)},
                "child_ids": list(r.child_ids),
            }
            for r in sorted(m.locations, key=lambda r: r.id)
        ],
        "connections": [
            {
                "id": r.id,
                "type": r.connection_type,
                "bounds": {"top_left": _pos_json(r.top_left), "bottom_right": _pos_json(r.bottom_right)},
                "connected_ids": sorted(r.connected_ids),
            }
            for r in sorted(m.connections, key=lambda r: r.id)
        ],
        "entities": [
            {
                "id": r.id,
                "type": r.entity_type,
                "position": _pos_json(r.position),
                "location_id": r.location_id,
                "equipment": {slot: item for slot, item in sorted(r.equipment)},
            }
            for r in sorted(m.entities, key=lambda r: r.id)
        ],
        "objects": [
            {
                "id": r.id,
                "type": r.object_type,
                "material": r.material,
                "position": _pos_json(r.position),
                "location_id": r.location_id,
            }
            for r in sorted(m.objects, key=lambda r: r.id)
        ],
    }


def _block_map_json(doc: BlockMapDocument) -> dict[str, Any]:
    blocks = sorted(doc.blocks, key=lambda b: (b.x, b.y, b.z, b.material))
    entities = sorted(doc.entities, key=lambda e: (e.x, e.y, e.z, e.entity_type, e.equipment))
    out: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "blocks": [], "entities": []}
    for b in blocks:
        out["blocks"].append({"material": b.material, "x": b.x, "y": b.y, "z": b.z})
    for e in entities:
        row: dict[str, Any] = {"type": e.entity_type, "x": e.x, "y": e.y, "z": e.z}
        if e.equipment:
            row["equipment"] = {slot: item for slot, item in sorted(e.equipment)}
        out["entities"].append(row)
    return out


def _write_json(payload: dict[str, Any], path: PathLike) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=True) + "\n"
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as err:
        raise OSError(f"cannot write {path}: {err}") from err


def write_semantic_map(m: SemanticMap, path: PathLike) -> None:
    _write_json(_semantic_map_json(m), path)


def write_block_map(doc: BlockMapDocument, path: PathLike) -> None:
    _write_json(_block_map_json(doc), path)


def write_world(world: WorldModel, grid: BlockGrid, hlr_path: PathLike, llr_path: PathLike) -> None:
    """Write the semantic map and block map for a world and its grid."""
    write_semantic_map(semantic_map_from_world(world), hlr_path)
    write_block_map(block_map_from_grid(grid), llr_path)


# -- validated reading --------------------------------------------------------


def _load_json(path: PathLike) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as err:
        raise ParseError(
            f"{path}: line {err.lineno} column {err.colno}: {err.msg}",
            path=str(path), line=err.lineno, column=err.colno,
        ) from err


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)


def _read_int(value: Any, context: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{context}: expected integer, got {value!r}")
    return value


def _read_str(value: Any, context: str) -> str:
    _require(isinstance(value, str) and value != "", f"{context}: expected nonempty string, got {value!r}")
    return value


def _read_position(value: Any, context: str) -> Position:
    _require(isinstance(value, list) and len(value) == 3, f"{context}: expected [x, y, z], got {value!r}")
    return Position(*(_read_int(v, context) for v in value))


def _read_bounds(value: Any, context: str) -> tuple[Position, Position]:
    _require(isinstance(value, dict), f"{context}: expected bounds object")
    tl = _read_position(value.get("top_left"), f"{context}.top_left")
    br = _read_position(value.get("bottom_right"), f"{context}.bottom_right")
    _require(
        tl.x <= br.x and tl.y <= br.y and tl.z <= br.z,
        f"{context}: top_left must be <= bottom_right per axis",
    )
    return tl, br


def _read_equipment(value: Any, context: str) -> tuple[tuple[str, str], ...]:
    if value is None:
        return ()
    _require(isinstance(value, dict), f"{context}: expected equipment object")
    for slot, item in value.items():
        _require(slot in EQUIPMENT_SLOTS, f"{context}: unknown equipment slot {slot!r}")
        _read_str(item, f"{context}.{slot}")
    return tuple(sorted(value.items()))


def _check_schema_version(data: Any, path: PathLike) -> None:
    _require(isinstance(data, dict), f"{path}: document root must be an object")
    version = data.get("schema_version")
    _require(
        version == SCHEMA_VERSION,
        f"{path}: unsupported schema_version {version!r} (expected {SCHEMA_VERSION!r})",
    )


def read_semantic_map(path: PathLike) -> SemanticMap:
    """Parse and validate a semantic-map file."""
    data = _load_json(path)
    _check_schema_version(data, path)
    map_id = _read_str(data.get("id"), f"{path}: id")

    locations = []
    for raw in data.get("locations", []):
        loc_id = _read_str(raw.get("id"), "location id")
        tl, br = _read_bounds(raw.get("bounds"), f"location {loc_id}: bounds")
        locations.append(
            LocationRecord(
                id=loc_id,
                location_type=_read_str(raw.get("type"), f"location {loc_id}: type"),
                material=_read_str(raw.get("material"), f"location {loc_id}: material"),
                top_left=tl,
                bottom_right=br,
                child_ids=tuple(_read_str(c, f"location {loc_id}: child id") for c in raw.get("child_ids", [])),
            )
        )
    by_id = {}
    for loc in locations:
        _require(loc.id not in by_id, f"duplicate location id {loc.id!r}")
        by_id[loc.id] = loc

    # child_ids must form a forest: every child exists, has one parent, and
    # following parents never loops.
    parent: dict[str, str] = {}
    for loc in locations:
        for child_id in loc.child_ids:
            _require(child_id in by_id, f"location {loc.id!r} lists unknown child {child_id!r}")
            _require(child_id not in parent, f"location {child_id!r} has more than one parent")
            parent[child_id] = loc.id
    for loc in locations:
        seen = {loc.id}
        cursor = loc.id
        while cursor in parent:
            cursor = parent[cursor]
            _require(cursor not in seen, f"location hierarchy cycle through {loc.id!r}")
            seen.add(cursor)

    seen_ids = set(by_id)

    connections = []
    for raw in data.get("connections", []):
        conn_id = _read_str(raw.get("id"), "connection id")
        _require(conn_id not in seen_ids, f"duplicate id {conn_id!r}")
        seen_ids.add(conn_id)
        connected = tuple(_read_str(c, f"connection {conn_id}: connected id") for c in raw.get("connected_ids", []))
        _require(len(connected) >= 2, f"connection {conn_id!r} must name at least 2 locations")
        for ref in connected:
            _require(ref in by_id, f"connection {conn_id!r} references unknown location {ref!r}")
        tl, br = _read_bounds(raw.get("bounds"), f"connection {conn_id}: bounds")
        connections.append(ConnectionRecord(conn_id, _read_str(raw.get("type"), f"connection {conn_id}: type"), tl, br, connected))

    entities = []
    for raw in data.get("entities", []):
        ent_id = _read_str(raw.get("id"), "entity id")
        _require(ent_id not in seen_ids, f"duplicate id {ent_id!r}")
        seen_ids.add(ent_id)
        location_id = raw.get("location_id")
        if location_id is not None:
            _require(location_id in by_id, f"entity {ent_id!r} references unknown location {location_id!r}")
        entities.append(
            EntityRecord(
                id=ent_id,
                entity_type=_read_str(raw.get("type"), f"entity {ent_id}: type"),
                position=_read_position(raw.get("position"), f"entity {ent_id}: position"),
                location_id=location_id,
                equipment=_read_equipment(raw.get("equipment"), f"entity {ent_id}: equipment"),
            )
        )

    objects = []
    for raw in data.get("objects", []):
        obj_id = _read_str(raw.get("id"), "object id")
        _require(obj_id not in seen_ids, f"duplicate id {obj_id!r}")
        seen_ids.add(obj_id)
        location_id = raw.get("location_id")
        if location_id is not None:
            _require(location_id in by_id, f"object {obj_id!r} references unknown location {location_id!r}")
        objects.append(
            ObjectRecord(
                id=obj_id,
                object_type=_read_str(raw.get("type"), f"object {obj_id}: type"),
                material=_read_str(raw.get("material"), f"object {obj_id}: material"),
                position=_read_position(raw.get("position"), f"object {obj_id}: position"),
                location_id=location_id,
            )
        )

    return SemanticMap(
        id=map_id,
        locations=tuple(sorted(locations, key=lambda r: r.id)),
        connections=tuple(sorted(connections, key=lambda r: r.id)),
        entities=tuple(sorted(entities, key=lambda r: r.id)),
        objects=tuple(sorted(objects, key=lambda r: r.id)),
    )


def read_block_map(path: PathLike) -> BlockMapDocument:
    """Parse and validate a block-map file. Input order is free; writes sort."""
    data = _load_json(path)
    _check_schema_version(data, path)

    blocks = []
    seen_cells: set[tuple[int, int, int]] = set()
    for raw in data.get("blocks", []):
        material = _read_str(raw.get("material"), "block material")
        cell = (
            _read_int(raw.get("x"), "block x"),
            _read_int(raw.get("y"), "block y"),
            _read_int(raw.get("z"), "block z"),
        )
        _require(cell not in seen_cells, f"duplicate block coordinates {cell}")
        seen_cells.add(cell)
        blocks.append(BlockRecord(material, *cell))

    entities = []
    for raw in data.get("entities", []):
        entity_type = _read_str(raw.get("type"), "entity type")
        entities.append(
            BlockEntityRecord(
                entity_type,
                _read_int(raw.get("x"), f"entity {entity_type}: x"),
                _read_int(raw.get("y"), f"entity {entity_type}: y"),
                _read_int(raw.get("z"), f"entity {entity_type}: z"),
                _read_equipment(raw.get("equipment"), f"entity {entity_type}: equipment"),
            )
        )
    return BlockMapDocument(blocks=blocks, entities=entities)
