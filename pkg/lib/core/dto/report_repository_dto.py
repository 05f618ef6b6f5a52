from lib.core.sdk.dto import BaseDTO


class ReadConfigDTO(BaseDTO):  # type: ignore
    """
    A DTO for whenever a run configuration is read.

    @param text: The raw content of the configuration file.
    @type text: str
    """

    text: str | None = None


class WriteReportDTO(BaseDTO):  # type: ignore
    """
    A DTO for whenever a file is written to the output directory.

    @param path: The path of the written file.
    @type path: str
    """

    path: str | None = None


class WriteCurveDTO(WriteReportDTO):
    """
    A DTO for whenever a curve is written as CSV.

    @param rows: The number of data rows written, header excluded.
    @type rows: int
    """

    rows: int | None = None
