"""The two-room demo house: the smallest end-to-end worked example.

Each room is a 6x6x5 log box with a plank floor, glass windows on three
sides, a roof, and one zombie at a seeded random position. The second room is
an identical copy shifted five voxels east, so the two share a wall; both sit
inside a "house" group whose bounds are the hull of the rooms.
"""

from __future__ import annotations

from ..geometry import BoundingVolume, EntitySpec, Position, WorldModel
from ..rng import SeededRng

ROOM_SEED = 0


def _build_room(room_id: str) -> BoundingVolume:
    top_left = Position(1, 3, 1)
    room = BoundingVolume(
        room_id,
        volume_type="room",
        material="log",
        top_left=top_left,
        bottom_right=top_left.shifted(5, 4, 5),
        has_roof=True,
    )
    # Plank floor, then windows on the two x walls and the low z wall.
    room.generate_box("planks", (1, 1, 0, 4, 1, 1))
    room.generate_box("glass", (0, 5, 1, 1, 1, 1))
    room.generate_box("glass", (5, 0, 1, 1, 1, 1))
    room.generate_box("glass", (1, 1, 1, 1, 0, 5))

    # Every room gets its own fixed-seed generator, so the zombie lands at the
    # same spot relative to the room no matter where the room ends up.
    rng = SeededRng(ROOM_SEED)
    room.add_entity(EntitySpec(f"{room_id}_zombie", "zombie", room.random_pos(rng, (1, 1, 1, 2, 1, 1))))
    return room


def gen_tutorial_house() -> WorldModel:
    """Build the demo house world: room_1, room_2 east of it, both in "house"."""
    room_1 = _build_room("room_1")
    room_2 = _build_room("room_2").shifted((5, 0, 0))

    house = BoundingVolume("house", volume_type="house")
    house.add_child(room_1)
    house.add_child(room_2)

    world = WorldModel("tutorial_house")
    world.add_volume(house)
    return world.finalize()
