"""Exact-arithmetic two-player game construction and Nash equilibrium analysis."""

from .components import Component, connected_components, maximal_bicliques
from .enumeration import ExtremeEquilibrium, enumerate_extreme_equilibria, face_vertices
from .errors import (
    ComputationCancelled,
    EditError,
    GameError,
    InputError,
    PivotError,
    PolyhedronError,
    RayTerminationError,
    UnsupportedGameError,
)
from .pathfollow import lemke_howson, lemke_prior
from .polyhedra import (
    HPolyhedron,
    LabeledVertex,
    build_best_response_polyhedra,
    enumerate_vertices,
)
from .rational import Rational, parse_rational, rational
from .reporting import EquilibriumReport, render, render_decimal, solve_enumerate
from .seqform import (
    BehaviorStrategy,
    RealizationPlan,
    SequenceForm,
    behavior_to_realization,
    build_sequence_form,
    realization_to_behavior,
)
from .strategic import (
    BimatrixGame,
    MixedStrategy,
    expected_payoffs,
    game_from_text,
    is_equilibrium,
    make_symmetric,
    make_zero_sum,
    new_game,
)
from .tree import CHANCE, GameTree, InformationSet, Node, ReducedStrategy
from .treexml import from_xml, read_game_xml, to_xml

__all__ = [name for name in dir() if not name.startswith("_")]
