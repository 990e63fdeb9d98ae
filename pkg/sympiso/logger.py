"""
Loggers keep track of what a run of `sympiso` checked. Every command of the
command line produces a `RunReport`; a logger decides how much of it ends up
in a file and/or on stdout. Library code itself never prints.
"""
import hashlib
import json
import logging
import os
import sys
import uuid
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ''


@dataclass
class RunReport:
    """Results of one command together with the named checks it made.

    :param command: The command that was run, e.g. 'iso symp'.
    :param inputs: Input texts; only their digest is kept.
    """
    command: str
    inputs: Sequence[str] = ()
    results: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    seconds: float = 0.0

    def __post_init__(self):
        sha = hashlib.sha256()
        for text in self.inputs:
            sha.update(text.encode('utf-8'))
            sha.update(b'\0')
        self.digest = sha.hexdigest()[:12]

    def check(self, name: str, passed: bool, detail: str = '') -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        """Everything except the timing, so equal inputs give equal output."""
        return {
            'command': self.command,
            'digest': self.digest,
            'results': self.results,
            'checks': {c.name: c.passed for c in self.checks},
            'passed': self.passed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


class BaseLogger:
    """
    The `sympiso.BaseLogger` writes one line per check of a report.
    """

    def __init__(self, target=None, stdout=False, fmt='%(asctime)s,%(message)s'):
        self.file = target
        if target is not None:
            if not os.path.exists(os.path.split(str(target))[0] or '.'):
                raise RuntimeError(f"path to target {os.path.split(str(target))[0]} does not exist!")
        formatter = logging.Formatter(fmt=fmt, datefmt='%Y-%m-%d %H:%M:%S')
        self.logger = logging.getLogger(name=f"{uuid.uuid4()}")
        self.logger.propagate = False
        if not self.logger.handlers:
            if target:
                file_handler = logging.FileHandler(filename=str(target))
                file_handler.setFormatter(fmt=formatter)
                self.logger.addHandler(file_handler)
            if stdout:
                stream_handler = logging.StreamHandler(stream=sys.stdout)
                stream_handler.setFormatter(fmt=formatter)
                self.logger.addHandler(stream_handler)
        self.logger.setLevel(level=logging.INFO)

    @staticmethod
    def _extra(kwargs) -> str:
        values = ','.join([str(item) for item in kwargs.values()])
        return f',{values}' if values != '' else ''

    def log(self, report: RunReport, **kwargs):
        """
        :param report: `sympiso.logger.RunReport` object
        :return: nothing, it merely logs to a file and perhaps stdout
        """
        values = self._extra(kwargs)
        for check in report.checks:
            status = 'pass' if check.passed else 'FAIL'
            self.logger.info(f'{report.command},{report.digest},{check.name},{status}' + values)


class SummaryLogger(BaseLogger):
    """
    The `sympiso.SummaryLogger` logs a single line per report.
    """

    def log(self, report: RunReport, **kwargs):
        passed = len(report.checks) - len(report.failed)
        self.logger.info(f'{report.command},{report.digest},{passed},{len(report.failed)},{report.seconds:.3f}'
                         + self._extra(kwargs))
