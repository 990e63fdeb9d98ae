from abc import ABCMeta, abstractmethod
from typing import Optional

from sympiso.logger import RunReport
from sympiso.search import ShardedSearch


class Problem(metaclass=ABCMeta):
    """A built-in instance with known answers; `run` recomputes them and records one check per answer."""
    name: str = ''
    label: str = ''
    description: str = ''

    @abstractmethod
    def run(self, max_enum: Optional[int] = None, search: Optional[ShardedSearch] = None) -> RunReport:
        raise NotImplementedError

    def report(self) -> RunReport:
        return RunReport(command=f"reference {self.name}", inputs=[self.name])
