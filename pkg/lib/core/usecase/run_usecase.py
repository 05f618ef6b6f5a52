import math
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from pydantic import ValidationError

from lib.core.entity.errors import (
    CONSISTENCY_FAILURE_CODE,
    NUMERICS_ERROR_CODE,
    SUCCESS_CODE,
    ConfigParseError,
    IoError,
    QMBPError,
)
from lib.core.entity.models import (
    BoundsComparison,
    BoundsReport,
    BranchingLaw,
    ConsistencyCheck,
    EigenResult,
    HardyResult,
)
from lib.core.entity.run_config import PipelineEnum, RunConfig, expand_pipelines
from lib.core.numerics.consistency import bounds_checks, decay_checks, eigen_checks, hardy_checks
from lib.core.ports.primary.run_primary_ports import RunInputPort
from lib.core.sdk.usecase_models import BaseErrorResponse
from lib.core.usecase_models.bounds_usecase_models import BoundsError, BoundsRequest
from lib.core.usecase_models.decay_usecase_models import DecayError, DecayRequest, DecayResponse
from lib.core.usecase_models.eigen_usecase_models import EigenError, EigenRequest
from lib.core.usecase_models.hardy_index_usecase_models import HardyIndexError, HardyIndexRequest
from lib.core.usecase_models.run_usecase_models import RunError, RunRequest, RunResponse
from lib.core.usecase_models.validate_law_usecase_models import ValidateLawError, ValidateLawRequest

REPORT_SCHEMA = 1

Curve = Tuple[str, str | None, List[str], List[Tuple[float, ...]]]


def finite_or_none(value: Any) -> Any:
    """
    Replaces non-finite floats by None, recursively, so that the report is strict JSON.
    """
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {key: finite_or_none(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [finite_or_none(item) for item in value]
    return value


class RunUseCase(RunInputPort):
    """
    Runs the requested pipelines in dependency order, cross-checks their results and writes the report and the
    curves. A failing pipeline skips the pipelines that depend on it; the report is written regardless.
    """

    def execute(self, request: RunRequest) -> RunResponse | RunError:
        try:
            config = self._read_config(request.config_path)
        except QMBPError as e:
            error = RunError.from_error(e)
            self.logger.error(f"{error}")
            return error

        try:
            return self._run(config, request)

        except Exception as e:
            self.logger.exception("Unexpected error during the run")
            return RunError(
                errorCode=NUMERICS_ERROR_CODE,
                errorMessage=f"Internal Error: {e}",
                errorName="InternalError",
                errorType="cli",
            )

    def _read_config(self, config_path: str) -> RunConfig:
        dto = self.report_repository.read_config(config_path=config_path)
        if not dto.status or dto.text is None:
            raise IoError(dto.errorMessage or f"Could not read {config_path}")
        try:
            return RunConfig.model_validate_json(dto.text)
        except ValidationError as e:
            raise ConfigParseError(f"Invalid run configuration {config_path}: {e}")

    def _run(self, config: RunConfig, request: RunRequest) -> RunResponse | RunError:
        pipelines = expand_pipelines(request.pipelines if request.pipelines else config.pipelines)
        seed = request.seed if request.seed is not None else config.seed
        tolerances = config.tolerances
        outputs = config.outputs
        self.logger.info(f"Running pipelines {[pipeline.value for pipeline in pipelines]} with seed {seed}")

        sections: Dict[str, Any] = {}
        failures: List[Tuple[str, BaseErrorResponse]] = []
        skipped: List[str] = []
        curves: List[Curve] = []
        checks: List[ConsistencyCheck] = []
        generator_dump: str | None = None

        law: BranchingLaw | None = None
        hardy: HardyResult | None = None
        bounds: BoundsReport | None = None
        comparison: BoundsComparison | None = None
        eigen: EigenResult | None = None
        decay: DecayResponse | None = None

        for pipeline in pipelines:
            needs_hardy = pipeline not in (PipelineEnum.VALIDATE, PipelineEnum.HARDY)
            if pipeline != PipelineEnum.VALIDATE and (law is None or (needs_hardy and hardy is None)):
                self.logger.warning(f"Skipping pipeline {pipeline.value}: a pipeline it depends on failed")
                skipped.append(pipeline.value)
                continue

            if pipeline == PipelineEnum.VALIDATE:
                validated = self.validate_law_usecase.execute(ValidateLawRequest(rates=config.law_rates()))
                if isinstance(validated, ValidateLawError):
                    failures.append((pipeline.value, validated))
                    continue
                law = validated.law
                sections["validate"] = {**law.model_dump(mode="json"), "roots": validated.roots.model_dump(mode="json")}

            elif pipeline == PipelineEnum.HARDY:
                assert law is not None
                hardy_response = self.hardy_index_usecase.execute(
                    HardyIndexRequest(law=law, rel_tol=tolerances.hardy_rel_tol, curve_points=tolerances.curve_points)
                )
                if isinstance(hardy_response, HardyIndexError):
                    failures.append((pipeline.value, hardy_response))
                    continue
                hardy = hardy_response.hardy
                sections["hardy"] = hardy.model_dump(mode="json", exclude={"curve"})
                curves.append(("phi", outputs.phi, ["s", "phi"], _as_rows(hardy.curve)))
                checks.extend(hardy_checks(hardy))

            elif pipeline == PipelineEnum.BOUNDS:
                assert law is not None and hardy is not None
                bounds_response = self.bounds_usecase.execute(BoundsRequest(law=law, rel_tol=tolerances.hardy_rel_tol))
                if isinstance(bounds_response, BoundsError):
                    failures.append((pipeline.value, bounds_response))
                    continue
                bounds, comparison = bounds_response.bounds, bounds_response.comparison
                sections["bounds"] = {
                    "report": bounds.model_dump(mode="json"),
                    "comparison": comparison.model_dump(mode="json"),
                }
                checks.extend(bounds_checks(hardy, bounds, comparison))

            elif pipeline == PipelineEnum.EIGEN:
                assert law is not None and hardy is not None
                eigen_response = self.eigen_usecase.execute(
                    EigenRequest(
                        law=law,
                        target_rel_tol=tolerances.eigen_target_rel_tol,
                        rtol=tolerances.eigen_rtol,
                        left_boundary=tolerances.left_boundary,
                    )
                )
                if isinstance(eigen_response, EigenError):
                    failures.append((pipeline.value, eigen_response))
                    continue
                eigen = eigen_response.eigen
                sections["eigen"] = eigen.model_dump(mode="json", exclude={"eigfun"})
                curves.append(("eigfun", outputs.eigfun, ["s", "phi0"], _as_rows(eigen.eigfun)))
                checks.extend(eigen_checks(hardy, eigen, comparison))

            elif pipeline == PipelineEnum.CTMC:
                assert law is not None and hardy is not None
                decay_response = self.decay_usecase.execute(
                    DecayRequest(
                        law=law,
                        lambda_ref=eigen.ell0 if eigen is not None else None,
                        tol=tolerances.ctmc_tol,
                        n_start=tolerances.ctmc_n_start,
                        n_max=tolerances.ctmc_n_max,
                        agreement=tolerances.ctmc_agreement,
                        monte_carlo_paths=tolerances.monte_carlo_paths,
                        seed=seed,
                        dump_generator=outputs.generator is not None,
                    )
                )
                if isinstance(decay_response, DecayError):
                    failures.append((pipeline.value, decay_response))
                    continue
                decay = decay_response
                sections["ctmc"] = {
                    "uniformization": decay.uniformization.model_dump(mode="json"),
                    "monte_carlo": None if decay.monte_carlo is None else decay.monte_carlo.model_dump(mode="json"),
                    "monte_carlo_censored": (
                        None if decay.monte_carlo_survival is None else decay.monte_carlo_survival.censored
                    ),
                }
                curves.append(("survival", outputs.survival, ["t", "survival", "stderr"], _survival_rows(decay, False)))
                if decay.monte_carlo_survival is not None:
                    curves.append(
                        (
                            "survival_monte_carlo",
                            outputs.survival_monte_carlo,
                            ["t", "survival", "stderr"],
                            _survival_rows(decay, True),
                        )
                    )
                generator_dump = decay.generator_dump
                checks.extend(decay_checks(hardy, decay.uniformization, eigen))

        written: Dict[str, str] = {}
        for kind, name, columns, rows in curves:
            if name is None:
                continue
            curve_dto = self.report_repository.write_curve(
                output_dir=request.output_dir, name=name, columns=columns, rows=rows
            )
            if not curve_dto.status or curve_dto.path is None:
                failures.append(("cli", _dto_error(curve_dto.errorMessage, f"Could not write {name}")))
                continue
            written[kind] = name

        if generator_dump is not None and outputs.generator is not None:
            text_dto = self.report_repository.write_text(
                output_dir=request.output_dir, name=outputs.generator, text=generator_dump
            )
            if text_dto.status:
                written["generator"] = outputs.generator
            else:
                failures.append(("cli", _dto_error(text_dto.errorMessage, f"Could not write {outputs.generator}")))

        passed = all(check.passed for check in checks)
        if failures:
            exit_code = failures[0][1].errorCode
        else:
            exit_code = SUCCESS_CODE if passed else CONSISTENCY_FAILURE_CODE
        for check in checks:
            if not check.passed:
                self.logger.warning(f"Consistency check {check.name} failed: {check}")

        report = {
            "schema": REPORT_SCHEMA,
            "config": config.model_dump(mode="json"),
            "pipelines": [pipeline.value for pipeline in pipelines],
            "seed": seed,
            "law": sections.get("validate"),
            "hardy": sections.get("hardy"),
            "bounds": sections.get("bounds"),
            "eigen": sections.get("eigen"),
            "ctmc": sections.get("ctmc"),
            "consistency": {"passed": passed, "checks": [check.model_dump(mode="json") for check in checks]},
            "errors": [
                {
                    "pipeline": pipeline,
                    "errorCode": error.errorCode,
                    "errorMessage": error.errorMessage,
                    "errorName": error.errorName,
                    "errorType": error.errorType,
                }
                for pipeline, error in failures
            ],
            "skipped": skipped,
            "outputs": dict(sorted(written.items())),
            "exit_code": exit_code,
        }
        report_dto = self.report_repository.write_report(
            output_dir=request.output_dir, name=outputs.report, report=finite_or_none(report)
        )
        if not report_dto.status or report_dto.path is None:
            error = RunError(
                errorCode=report_dto.errorCode or IoError.error_code,
                errorMessage=report_dto.errorMessage or f"Could not write {outputs.report}",
                errorName=report_dto.errorName or IoError.error_name,
                errorType=report_dto.errorType or IoError.error_type,
                pipeline="cli",
            )
            self.logger.error(f"{error}")
            return error

        if failures:
            pipeline, failure = failures[0]
            error = RunError(
                errorCode=failure.errorCode,
                errorMessage=failure.errorMessage,
                errorName=failure.errorName,
                errorType=failure.errorType,
                pipeline=pipeline,
                report_path=report_dto.path,
            )
            self.logger.error(f"{error}")
            return error

        self.logger.info(f"Run finished with exit code {exit_code}; report at {report_dto.path}")
        return RunResponse(
            report_path=report_dto.path,
            exit_code=exit_code,
            pipelines=[pipeline.value for pipeline in pipelines],
            consistency=checks,
            outputs={kind: str(Path(request.output_dir) / name) for kind, name in written.items()},
        )


def _survival_rows(decay: DecayResponse, monte_carlo: bool) -> List[Tuple[float, ...]]:
    curve = decay.monte_carlo_survival if monte_carlo else decay.survival
    assert curve is not None
    return list(zip(curve.times, curve.survival, curve.stderr))


def _dto_error(message: str | None, default: str) -> BaseErrorResponse:
    return BaseErrorResponse.from_error(IoError(message or default))


def _as_rows(points: Sequence[Sequence[float]]) -> List[Tuple[float, ...]]:
    return [tuple(point) for point in points]
