from pydantic import Field

from lib.core.entity.models import BranchingLaw, RootStructure
from lib.core.sdk.viewmodel import BaseViewModel


class ValidateLawViewModel(BaseViewModel):
    """
    View Model for the Validate Law Feature. Summarises a law: its moments, regime and the roots of B.
    """

    law: BranchingLaw | None = Field(default=None, description="The validated law.")
    roots: RootStructure | None = Field(default=None, description="The roots of B on [0, 1].")

    model_config = {
        "json_schema_extra": {
            "examples": [
                {
                    "status": True,
                    "code": 0,
                    "law": {
                        "b": [2.0, -3.0, 1.0],
                        "m_d": 2.0,
                        "m_b": 1.0,
                        "birth_mass": 1.0,
                        "bprime1": -1.0,
                        "bpp1": 2.0,
                        "regime": "subcritical",
                        "series": {"a": [2.0, -1.0]},
                    },
                    "roots": {
                        "roots": [1.0],
                        "q": None,
                        "double_root_at_one": False,
                        "interval": [0.0, 1.0],
                        "a_roots": [],
                    },
                }
            ]
        }
    }
