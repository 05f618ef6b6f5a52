import sys
import logging.config
from pathlib import Path

from dependency_injector import containers, providers

from lib.core.sdk.utils import get_all_modules
from lib.infrastructure.config.features.bounds_feature_container import BoundsFeatureContainer
from lib.infrastructure.config.features.decay_feature_container import DecayFeatureContainer
from lib.infrastructure.config.features.eigen_feature_container import EigenFeatureContainer
from lib.infrastructure.config.features.hardy_index_feature_container import HardyIndexFeatureContainer
from lib.infrastructure.config.features.run_feature_container import RunFeatureContainer
from lib.infrastructure.config.features.validate_law_feature_container import ValidateLawFeatureContainer
from lib.infrastructure.repository.local.local_report_repository import LocalReportRepository
import lib.infrastructure.cli.commands as commands

CONFIG_FILE = Path(__file__).parent.parent.parent.parent / "config.yaml"


class ApplicationContainer(containers.DeclarativeContainer):
    config = providers.Configuration(yaml_files=[str(CONFIG_FILE)])

    # stdout carries the view models of the commands; basicConfig logs to sys.stderr by default
    logging = providers.Resource(
        logging.basicConfig,
        level=config.log.level,
        format=config.log.format,
    )

    # Repositories:
    local_report_repository: providers.Factory[LocalReportRepository] = providers.Factory(
        LocalReportRepository,
        float_format=config.output.float_format,
    )

    # Dynamic wiring of cli commands:
    modules = get_all_modules(package=commands, relative_package_dir=Path(__file__).parent.parent / "cli" / "commands")
    wiring_config = containers.WiringConfiguration(
        modules=modules,
    )

    # Features:
    validate_law_feature = providers.Container(
        ValidateLawFeatureContainer,
        config=config.features.validate_law,
        report_repository=local_report_repository,
    )

    hardy_index_feature = providers.Container(
        HardyIndexFeatureContainer,
        config=config.features.hardy_index,
        rel_tol=config.features.hardy_index.rel_tol.as_float(),
        curve_points=config.features.hardy_index.curve_points,
    )

    bounds_feature = providers.Container(
        BoundsFeatureContainer,
        config=config.features.bounds,
        rel_tol=config.features.bounds.rel_tol.as_float(),
    )

    eigen_feature = providers.Container(
        EigenFeatureContainer,
        config=config.features.eigen,
        target_rel_tol=config.features.eigen.target_rel_tol.as_float(),
        rtol=config.features.eigen.rtol.as_float(),
        left_boundary=config.features.eigen.left_boundary,
    )

    decay_feature = providers.Container(
        DecayFeatureContainer,
        config=config.features.decay,
        tol=config.features.decay.tol.as_float(),
        n_start=config.features.decay.n_start.as_int(),
        n_max=config.features.decay.n_max.as_int(),
        agreement=config.features.decay.agreement.as_float(),
        monte_carlo_paths=config.features.decay.monte_carlo_paths.as_int(),
        state_cap=config.features.decay.state_cap.as_int(),
    )

    run_feature = providers.Container(
        RunFeatureContainer,
        config=config.features.run,
        report_repository=local_report_repository,
        validate_law_usecase=validate_law_feature.usecase,
        hardy_index_usecase=hardy_index_feature.usecase,
        bounds_usecase=bounds_feature.usecase,
        eigen_usecase=eigen_feature.usecase,
        decay_usecase=decay_feature.usecase,
    )
