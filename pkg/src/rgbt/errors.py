"""Exception hierarchy shared by all rgbt modules."""

from __future__ import annotations


class RgbtError(Exception):
    """Base class for every error raised by this package."""


# ---------------------------------------------------------------------------
# planar graph construction / surgery
# ---------------------------------------------------------------------------

class GraphError(RgbtError):
    pass


class NotPlanarRotation(GraphError):
    """Face tracing of the rotation system violates Euler's formula."""


class NonTriangleFace(GraphError):
    """A face that must be a triangle is not one (MPG mode)."""


class DisconnectedGraph(GraphError):
    pass


class MultiEdge(GraphError):
    """Loop or repeated neighbor in a rotation list."""


class EdgeNotFound(GraphError):
    pass


class ContractionCreatesMultiEdge(GraphError):
    """Endpoints of the contracted edge share a neighbor besides N and S."""


class NotSimpleCycle(GraphError):
    """The traced boundary repeats a vertex (pinched link / outer facet)."""


class NotConnectedTD(GraphError):
    pass


class BoundaryMismatch(GraphError):
    """Transplant interior boundary does not fit the host cycle."""


class ResultNotSimple(GraphError):
    """Transplant would create a loop or parallel edge."""


class CapExceeded(RgbtError):
    """An enumeration was asked to exceed its configured size cap."""


# ---------------------------------------------------------------------------
# planar_code ingestion
# ---------------------------------------------------------------------------

class TruncatedStream(RgbtError):
    pass


class VertexIndexOutOfRange(RgbtError):
    pass


class HeaderMismatch(RgbtError):
    pass


# ---------------------------------------------------------------------------
# colorings and tilings
# ---------------------------------------------------------------------------

class ColoringError(RgbtError):
    pass


class NotProper(ColoringError):
    """Adjacent vertices share a color."""


class NotGrandError(ColoringError):
    """Raised when a grand witness is required but none exists."""


class RedOddCycle(ColoringError):
    """A monochrome odd cycle obstructs the induced vertex coloring."""


class EdgePresent(ColoringError):
    """classify_diamond was handed a host that still contains e."""


# ---------------------------------------------------------------------------
# canal / ECS machinery
# ---------------------------------------------------------------------------

class CanalError(RgbtError):
    pass


class AmbiguousTrace(CanalError):
    """No unique exit under the trace priority rule; supply an explicit ring."""


class OpenRing(CanalError):
    """ECS needs a closed ring (or one closed by declared exterior arcs)."""


class StaleRing(CanalError):
    """Ring descriptor is inconsistent with the current tiling."""


class SeedNotInPair(CanalError):
    """VCS seed vertex does not carry one of the two swapped colors."""


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------

class ScenarioError(RgbtError):
    pass


class InconsistentFixedColors(ScenarioError):
    pass


class MalformedWalk(ScenarioError):
    pass


class StepInapplicable(ScenarioError):
    """A script step cannot run against the current scenario state."""


class UnknownScenario(ScenarioError):
    pass


# ---------------------------------------------------------------------------
# toolkit
# ---------------------------------------------------------------------------

class CorpusMissing(RgbtError):
    pass


class PortBusy(RgbtError):
    pass
