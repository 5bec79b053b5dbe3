"""Exception hierarchy shared by every module of the package."""


class PowerGraphError(Exception):
    """Base class for domain errors (CLI exit code 1)."""

    code = "error"

    def to_dict(self):
        return {"code": self.code, "type": type(self).__name__, "message": str(self)}


def _make(name, code, doc, base=PowerGraphError):
    cls = type(name, (base,), {"__doc__": doc, "code": code})
    return cls


# group_core
InvalidSpec = _make("InvalidSpec", "invalid_spec", "Group constructor parameters are invalid.")
NotAGroup = _make("NotAGroup", "not_a_group", "A Cayley table violates the group axioms.")
TooLarge = _make("TooLarge", "too_large", "Object exceeds a configured size cap or search budget.")
OutOfRange = _make("OutOfRange", "out_of_range", "Element or vertex id outside [0, n).")
PreconditionViolated = _make("PreconditionViolated", "precondition", "An operation's precondition does not hold.")
TrivialGroup = _make("TrivialGroup", "trivial_group", "Operation needs a group with at least two elements.")
TooSmall = _make("TooSmall", "too_small", "Operation needs a larger group.")

# graph_core
BadVertexList = _make("BadVertexList", "bad_vertex_list", "Vertex list empty, duplicated or out of range.")
PartitionMismatch = _make("PartitionMismatch", "partition_mismatch", "Partition does not cover the graph's vertex set.")
IsomorphismTimeout = _make("IsomorphismTimeout", "timeout", "Isomorphism search exceeded its time budget.")
NotTransitive = _make("NotTransitive", "not_transitive", "Digraph is not transitively closed.")
EmptySet = _make("EmptySet", "empty_set", "A nonempty vertex set was required.")

# relations / reconstruction
NotAPowerGraphShape = _make(
    "NotAPowerGraphShape", "not_a_power_graph", "Graph cannot be the power graph of a finite group."
)
NotSingletonStar = _make("NotSingletonStar", "not_singleton_star", "Procedure requires exactly one star vertex.")
NotAnNClass = _make("NotAnNClass", "not_an_n_class", "Vertex set is not a closed-twin class.")
SizeMismatch = _make("SizeMismatch", "size_mismatch", "Class size disagrees with its type parameters.")
ClassificationFailed = _make(
    "ClassificationFailed", "classification_failed", "A closed-twin class fits no type.", NotAPowerGraphShape
)
OrientationAmbiguous = _make(
    "OrientationAmbiguous", "orientation_ambiguous", "An edge cannot be oriented consistently.", NotAPowerGraphShape
)

# recognition
NotAPowerDigraphShape = _make(
    "NotAPowerDigraphShape", "not_a_power_digraph", "Digraph cannot be a directed power graph."
)
InconsistentCounts = _make(
    "InconsistentCounts", "inconsistent_counts", "Order census is not realisable by an abelian group."
)

# cycles
InvalidParams = _make("InvalidParams", "invalid_params", "Invalid numeric parameters.")
InvalidN = _make("InvalidN", "invalid_n", "Cyclic order too small for the construction.", InvalidParams)
QuotientSearchFailed = _make(
    "QuotientSearchFailed", "quotient_search_failed", "No hamiltonian path found in the class quotient."
)
NotACycle = _make("NotACycle", "not_a_cycle", "Vertex sequence is not a cycle of the graph.")
