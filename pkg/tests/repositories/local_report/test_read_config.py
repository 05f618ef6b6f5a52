from pathlib import Path

from faker import Faker

from lib.infrastructure.config.containers import ApplicationContainer


def test_read_config(app_initialization_container: ApplicationContainer, tmp_path: Path, fake: Faker) -> None:
    report_repository = app_initialization_container.local_report_repository()
    text = f'{{"rates": [2.0, -3.0, 1.0], "seed": {fake.pyint()}}}'
    config_path = tmp_path / "config.json"
    config_path.write_text(text, encoding="utf-8")

    read_config_DTO = report_repository.read_config(config_path=str(config_path))

    assert read_config_DTO.status == True
    assert read_config_DTO.errorCode == None
    assert read_config_DTO.text == text


def test_error_read_config_missing_file(app_initialization_container: ApplicationContainer, tmp_path: Path) -> None:
    report_repository = app_initialization_container.local_report_repository()

    read_config_DTO = report_repository.read_config(config_path=str(tmp_path / "missing.json"))

    assert read_config_DTO.status == False
    assert read_config_DTO.errorCode == 5
    assert read_config_DTO.errorName == "IoError"
    assert read_config_DTO.text is None


def test_error_read_config_not_utf8(app_initialization_container: ApplicationContainer, tmp_path: Path) -> None:
    report_repository = app_initialization_container.local_report_repository()
    config_path = tmp_path / "config.json"
    config_path.write_bytes(b"\xff\xfe\x00")

    read_config_DTO = report_repository.read_config(config_path=str(config_path))

    assert read_config_DTO.status == False
    assert read_config_DTO.errorCode == 5
