import json
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from lib.core.dto.report_repository_dto import ReadConfigDTO, WriteCurveDTO, WriteReportDTO
from lib.core.entity.errors import IO_ERROR_CODE
from lib.core.ports.secondary.report_repository import ReportRepositoryOutputPort


class LocalReportRepository(ReportRepositoryOutputPort):
    """
    A local filesystem implementation of the report repository. Files are UTF-8 with LF line endings.

    @ivar float_format: The format of floats in CSV curves.
    @type float_format: str
    """

    def __init__(self, float_format: str = "%.17g") -> None:
        super().__init__()

        self._float_format = float_format

    @property
    def float_format(self) -> str:
        return self._float_format

    def _target(self, output_dir: str, name: str) -> Path:
        directory = Path(output_dir)
        directory.mkdir(parents=True, exist_ok=True)
        return directory / name

    def read_config(self, config_path: str) -> ReadConfigDTO:
        """
        Reads a run configuration.

        @param config_path: The path of the configuration file.
        @type config_path: str
        @return: A DTO containing the content of the file.
        @rtype: ReadConfigDTO
        """
        try:
            text = Path(config_path).read_text(encoding="utf-8")
            return ReadConfigDTO(status=True, text=text)

        except (OSError, UnicodeDecodeError) as e:
            self.logger.error(f"Could not read the configuration {config_path}: {e}")
            return ReadConfigDTO(
                status=False,
                errorCode=IO_ERROR_CODE,
                errorMessage=f"Could not read the configuration {config_path}: {e}",
                errorName="IoError",
                errorType="io_error",
            )

    def write_report(self, output_dir: str, name: str, report: Dict[str, Any]) -> WriteReportDTO:
        """
        Writes a report as JSON with sorted keys, two-space indentation and a trailing newline.

        @param output_dir: The output directory, created if missing.
        @type output_dir: str
        @param name: The file name of the report.
        @type name: str
        @param report: The report. Must not contain non-finite floats.
        @type report: Dict[str, Any]
        @return: A DTO containing the path of the report.
        @rtype: WriteReportDTO
        """
        try:
            content = json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"
        except (TypeError, ValueError) as e:
            self.logger.error(f"The report is not serializable: {e}")
            return WriteReportDTO(
                status=False,
                errorCode=IO_ERROR_CODE,
                errorMessage=f"The report is not serializable: {e}",
                errorName="IoError",
                errorType="io_error",
            )

        try:
            target = self._target(output_dir, name)
            with target.open("w", encoding="utf-8", newline="\n") as f:
                f.write(content)
            self.logger.info(f"Wrote report {target}")
            return WriteReportDTO(status=True, path=str(target))

        except OSError as e:
            self.logger.error(f"Could not write the report {name} to {output_dir}: {e}")
            return WriteReportDTO(
                status=False,
                errorCode=IO_ERROR_CODE,
                errorMessage=f"Could not write the report {name} to {output_dir}: {e}",
                errorName="IoError",
                errorType="io_error",
            )

    def write_curve(
        self, output_dir: str, name: str, columns: List[str], rows: Sequence[Sequence[float]]
    ) -> WriteCurveDTO:
        """
        Writes a curve as CSV with a header line and 17 significant digits.

        @param output_dir: The output directory, created if missing.
        @type output_dir: str
        @param name: The file name of the curve.
        @type name: str
        @param columns: The column names.
        @type columns: List[str]
        @param rows: The data rows.
        @type rows: Sequence[Sequence[float]]
        @return: A DTO containing the path of the curve and its row count.
        @rtype: WriteCurveDTO
        """
        try:
            frame = pd.DataFrame([list(row) for row in rows], columns=columns, dtype=float)
        except ValueError as e:
            self.logger.error(f"Curve {name} does not match the columns {columns}: {e}")
            return WriteCurveDTO(
                status=False,
                errorCode=IO_ERROR_CODE,
                errorMessage=f"Curve {name} does not match the columns {columns}: {e}",
                errorName="IoError",
                errorType="io_error",
            )

        try:
            target = self._target(output_dir, name)
            frame.to_csv(
                target, index=False, float_format=self.float_format, lineterminator="\n", encoding="utf-8"
            )
            self.logger.info(f"Wrote {len(frame)} rows to {target}")
            return WriteCurveDTO(status=True, path=str(target), rows=len(frame))

        except OSError as e:
            self.logger.error(f"Could not write the curve {name} to {output_dir}: {e}")
            return WriteCurveDTO(
                status=False,
                errorCode=IO_ERROR_CODE,
                errorMessage=f"Could not write the curve {name} to {output_dir}: {e}",
                errorName="IoError",
                errorType="io_error",
            )

    def write_text(self, output_dir: str, name: str, text: str) -> WriteReportDTO:
        try:
            target = self._target(output_dir, name)
            with target.open("w", encoding="utf-8", newline="\n") as f:
                f.write(text)
            return WriteReportDTO(status=True, path=str(target))

        except OSError as e:
            self.logger.error(f"Could not write {name} to {output_dir}: {e}")
            return WriteReportDTO(
                status=False,
                errorCode=IO_ERROR_CODE,
                errorMessage=f"Could not write {name} to {output_dir}: {e}",
                errorName="IoError",
                errorType="io_error",
            )
