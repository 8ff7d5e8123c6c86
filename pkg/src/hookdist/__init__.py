"""Distributions of hook lengths over integer partitions."""

from ._kernels import BACKEND
from .distribution import Flavor, HookDistribution
from .errors import HookComputationError, ResourceGuardError
from .partitions import Partition, brute_force_distribution, enumerate_partitions, hook_lengths
from .qseries import evaluate_P, hook_distribution, partition_numbers, thook_distribution, tmult_distribution

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Flavor",
    "HookComputationError",
    "HookDistribution",
    "Partition",
    "ResourceGuardError",
    "brute_force_distribution",
    "enumerate_partitions",
    "evaluate_P",
    "hook_distribution",
    "hook_lengths",
    "partition_numbers",
    "thook_distribution",
    "tmult_distribution",
]
