"""Exception types for map validation, voltage data and the cycle search."""


class SplitCyclesError(Exception):
    """Base class for all library errors."""


# -- rotation maps ----------------------------------------------------------

class MapError(SplitCyclesError):
    pass


class AsymmetricAdjacency(MapError):
    pass


class RepeatedNeighbor(MapError):
    pass


class EmptyRotation(MapError):
    pass


class OddChi(MapError):
    """Odd Euler characteristic: the rotation table is corrupted."""


class NotACycle(MapError):
    pass


class EdgeMissing(MapError):
    pass


class NotAFace(MapError):
    pass


class ResultNotSimple(MapError):
    pass


class NotContractible(MapError):
    pass


class IsK4Sphere(MapError):
    pass


class ParseError(MapError):
    """Malformed rotmap/voltmap input; message carries the line number."""


# -- voltage bases ----------------------------------------------------------

class VoltageError(SplitCyclesError):
    pass


class NonTriangularFace(VoltageError):
    pass


class NonzeroFaceSum(VoltageError):
    pass


class DerivedNotTriangular(VoltageError):
    pass


class DerivedNotSimple(VoltageError):
    pass


class SOutOfRange(VoltageError):
    pass


class ParamOutOfRange(SplitCyclesError):
    pass


# -- search -----------------------------------------------------------------

class SearchError(SplitCyclesError):
    pass


class NotAdjacent(SearchError):
    pass


class AlreadyOnPath(SearchError):
    pass


class PathTooShort(SearchError):
    pass


class NotClosable(SearchError):
    pass


class NonIntegralGenus(SearchError):
    """The side-genus formula did not divide; internal inconsistency."""


class NotTriangulation(SearchError):
    pass


class NotTransitive(SearchError):
    pass
