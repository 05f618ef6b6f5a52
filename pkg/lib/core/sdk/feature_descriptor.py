from pydantic import BaseModel, ConfigDict


class BaseFeatureDescriptor(
    BaseModel,
):
    """
    Describes a feature as configured in config.yaml; disabled features are not offered on the command line.
    """

    name: str
    description: str
    version: str
    tags: list[str] = []
    enabled: bool = True
    model_config = ConfigDict(
        arbitrary_types_allowed=True,
    )
