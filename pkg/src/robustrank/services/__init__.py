"""
The services package for robustrank. The ServiceProvider is imported from
``robustrank.services.service_provider``.
"""

from .sample_executor import SampleExecutor

__all__ = ["SampleExecutor"]
