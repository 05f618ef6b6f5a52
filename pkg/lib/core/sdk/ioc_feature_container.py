from dependency_injector import containers, providers

from lib.core.sdk.feature_descriptor import BaseFeatureDescriptor


class BaseFeatureContainer(containers.DeclarativeContainer):
    """
    Container of one feature. Its configuration is the feature block of config.yaml, from which the descriptor is
    built; subclasses add the usecase, presenter and controller providers and read their numerical defaults from the
    same block.
    """

    config = providers.Configuration()
    feature_descriptor = providers.Factory(
        BaseFeatureDescriptor,
        name=config.name,
        description=config.description,
        version=config.version,
        tags=config.tags,
        enabled=config.enabled,
    )
