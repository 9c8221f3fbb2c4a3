"""Exception types shared across the package."""


class GameError(Exception):
    """Base class for all domain errors raised by this package."""


class InputError(GameError):
    """Malformed or inconsistent user input (files, matrices, options)."""


class EditError(GameError):
    """A tree-editing action that would violate a game-tree invariant."""


class UnsupportedGameError(GameError):
    """A structurally valid game outside the supported class (e.g. >2 players)."""


class PivotError(GameError):
    """Invalid pivot request (zero pivot element, missing variable)."""


class PolyhedronError(GameError):
    """Vertex enumeration asked about a polyhedron outside its contract."""


class RayTerminationError(GameError):
    """Complementary pivoting left the feasible region on an unbounded ray.

    For the LCP classes solved here this indicates an internal invariant
    failure, never a property of the input game.
    """


class ComputationCancelled(GameError):
    """Cooperative cancellation (timeout or interrupt) stopped a solver."""
