from abc import ABC, abstractmethod
import logging
from typing import Any, Dict, List, Sequence

from lib.core.dto.report_repository_dto import ReadConfigDTO, WriteCurveDTO, WriteReportDTO


class ReportRepositoryOutputPort(ABC):
    """
    Abstract base class for the report repository output port: reads run configurations and persists reports and
    curves.

    @cvar logger: The logger for this class
    @type logger: logging.Logger
    """

    def __init__(self) -> None:
        self._logger = logging.getLogger(self.__class__.__name__)

    @property
    def logger(self) -> logging.Logger:
        return self._logger

    @abstractmethod
    def read_config(self, config_path: str) -> ReadConfigDTO:
        """
        Reads a run configuration.

        @param config_path: The path of the configuration file.
        @type config_path: str
        @return: A DTO containing the content of the file.
        @rtype: ReadConfigDTO
        """
        raise NotImplementedError

    @abstractmethod
    def write_report(self, output_dir: str, name: str, report: Dict[str, Any]) -> WriteReportDTO:
        """
        Writes a report as JSON with sorted keys.

        @param output_dir: The output directory, created if missing.
        @type output_dir: str
        @param name: The file name of the report.
        @type name: str
        @param report: The report. Must not contain non-finite floats.
        @type report: Dict[str, Any]
        @return: A DTO containing the path of the report.
        @rtype: WriteReportDTO
        """
        raise NotImplementedError

    @abstractmethod
    def write_curve(
        self, output_dir: str, name: str, columns: List[str], rows: Sequence[Sequence[float]]
    ) -> WriteCurveDTO:
        """
        Writes a curve as CSV with a header line.

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
        raise NotImplementedError

    @abstractmethod
    def write_text(self, output_dir: str, name: str, text: str) -> WriteReportDTO:
        raise NotImplementedError
