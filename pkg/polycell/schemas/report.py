from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel


class InstanceStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ERROR = "error"


class InstanceResult(BaseModel):
    index: int
    name: str
    construction: str
    status: InstanceStatus
    detail: Optional[str] = None
    documents: Dict[str, str] = {}


class VerificationReport(BaseModel):
    suite: str
    title: str
    seed: int
    trials: int
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0
    instances: List[InstanceResult] = []
    wall_clock: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.errors == 0

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)


class ConjectureReport(BaseModel):
    conjecture: str
    family: str
    seed: int
    instances: List[InstanceResult] = []
    counterexample: Optional[InstanceResult] = None
    verdict: str = "no counterexample within bounds"
    wall_clock: Optional[float] = None

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)
