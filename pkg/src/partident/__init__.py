"""Exact verification of partition identities through lambda-ring computations."""

from .exactring import Poly, Series
from .lambdaring import LambdaElement
from .partitions import Partition, enumerate_partitions
from .report import VerificationReport

__all__ = ["Poly", "Series", "LambdaElement", "Partition", "enumerate_partitions",
           "VerificationReport"]
__version__ = "0.1.0"
