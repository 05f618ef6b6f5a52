from typing import Dict, List

from pydantic import Field

from lib.core.entity.models import ConsistencyCheck
from lib.core.sdk.viewmodel import BaseViewModel


class RunViewModel(BaseViewModel):
    """
    View Model for the Run Feature. The code is the exit code of `qmbp run`.
    """

    report_path: str | None = Field(default=None, description="Path of the written report.")
    pipelines: List[str] = Field(default=[], description="Pipelines that ran, in execution order.")
    consistency: List[ConsistencyCheck] = Field(default=[], description="The consistency checks.")
    outputs: Dict[str, str] = Field(default={}, description="The written files by kind.")
    pipeline: str | None = Field(default=None, description="The pipeline a failure is attributed to.")

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "status": True,
                    "code": 0,
                    "report_path": "out/report.json",
                    "pipelines": ["validate", "hardy"],
                    "consistency": [
                        {
                            "name": "hardy_stationary_at_maximizer",
                            "passed": True,
                            "value": 2.1e-10,
                            "lower": -1e-06,
                            "upper": 1e-06,
                        }
                    ],
                    "outputs": {"report": "out/report.json", "phi": "out/phi.csv"},
                }
            ]
        }
    }
