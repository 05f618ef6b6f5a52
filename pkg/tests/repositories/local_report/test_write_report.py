import json
import math
from pathlib import Path

from lib.infrastructure.config.containers import ApplicationContainer


def test_write_report(app_initialization_container: ApplicationContainer, tmp_path: Path) -> None:
    report_repository = app_initialization_container.local_report_repository()
    output_dir = tmp_path / "nested" / "out"
    report = {"z": 1, "a": {"d2": 0.28601, "names": ["hardy", "bounds"]}}

    write_report_DTO = report_repository.write_report(output_dir=str(output_dir), name="report.json", report=report)

    assert write_report_DTO.status == True
    assert write_report_DTO.path == str(output_dir / "report.json")
    content = (output_dir / "report.json").read_bytes()
    assert content.endswith(b"}\n")
    assert b"\r\n" not in content
    assert content.index(b'"a"') < content.index(b'"z"')
    assert json.loads(content) == report


def test_error_write_report_non_finite(app_initialization_container: ApplicationContainer, tmp_path: Path) -> None:
    report_repository = app_initialization_container.local_report_repository()

    write_report_DTO = report_repository.write_report(
        output_dir=str(tmp_path), name="report.json", report={"d2": math.inf}
    )

    assert write_report_DTO.status == False
    assert write_report_DTO.errorCode == 5
    assert not (tmp_path / "report.json").exists()


def test_error_write_report_output_dir_is_a_file(
    app_initialization_container: ApplicationContainer, tmp_path: Path
) -> None:
    report_repository = app_initialization_container.local_report_repository()
    blocker = tmp_path / "out"
    blocker.write_text("", encoding="utf-8")

    write_report_DTO = report_repository.write_report(output_dir=str(blocker), name="report.json", report={})

    assert write_report_DTO.status == False
    assert write_report_DTO.errorName == "IoError"


def test_write_text(app_initialization_container: ApplicationContainer, tmp_path: Path) -> None:
    report_repository = app_initialization_container.local_report_repository()

    write_text_DTO = report_repository.write_text(output_dir=str(tmp_path), name="generator.txt", text="1 0 2\n")

    assert write_text_DTO.status == True
    assert (tmp_path / "generator.txt").read_text(encoding="utf-8") == "1 0 2\n"
