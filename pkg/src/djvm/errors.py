"""Error taxonomy shared by the core, the service and the CLI.

Each error carries a ``category`` used by the service to build structured
error bodies and by the CLI to pick an exit code.
"""


class SimulatorError(Exception):
    category = "data"


class ConfigurationError(SimulatorError):
    """Bad machine or command configuration (maps to a usage failure)."""

    category = "usage"


class DataError(SimulatorError):
    """Invalid input data or a type mismatch on a memory/register cell."""

    category = "data"


class CapacityError(SimulatorError):
    """Operation would exceed a memory, register or pipeline capacity bound."""

    category = "capacity"


class OracleContractError(SimulatorError):
    """An oracle broke its contract (non-bit return value)."""

    category = "oracle"
