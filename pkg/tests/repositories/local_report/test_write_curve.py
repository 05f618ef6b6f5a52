from pathlib import Path

import numpy as np
from faker import Faker

from lib.infrastructure.config.containers import ApplicationContainer


def test_write_curve(app_initialization_container: ApplicationContainer, tmp_path: Path, fake: Faker) -> None:
    report_repository = app_initialization_container.local_report_repository()
    assert report_repository.float_format == "%.17g"
    rows = [(fake.pyfloat(min_value=0, max_value=1), fake.pyfloat(min_value=0, max_value=1)) for _ in range(20)]
    rows.append((1.0 / 3.0, 0.1))

    write_curve_DTO = report_repository.write_curve(
        output_dir=str(tmp_path), name="phi.csv", columns=["s", "phi"], rows=rows
    )

    assert write_curve_DTO.status == True
    assert write_curve_DTO.rows == 21
    lines = (tmp_path / "phi.csv").read_text(encoding="utf-8").split("\n")
    assert lines[0] == "s,phi"
    assert lines[-1] == ""
    assert len(lines) == 23
    assert lines[-2] == "0.33333333333333331,0.10000000000000001"
    parsed = np.loadtxt(tmp_path / "phi.csv", delimiter=",", skiprows=1)
    np.testing.assert_array_equal(parsed, np.array(rows))


def test_write_empty_curve(app_initialization_container: ApplicationContainer, tmp_path: Path) -> None:
    report_repository = app_initialization_container.local_report_repository()

    write_curve_DTO = report_repository.write_curve(output_dir=str(tmp_path), name="empty.csv", columns=["t"], rows=[])

    assert write_curve_DTO.status == True
    assert write_curve_DTO.rows == 0
    assert (tmp_path / "empty.csv").read_text(encoding="utf-8") == "t\n"


def test_error_write_curve_mismatched_columns(
    app_initialization_container: ApplicationContainer, tmp_path: Path
) -> None:
    report_repository = app_initialization_container.local_report_repository()

    write_curve_DTO = report_repository.write_curve(
        output_dir=str(tmp_path), name="phi.csv", columns=["s", "phi"], rows=[(0.0, 1.0, 2.0)]
    )

    assert write_curve_DTO.status == False
    assert write_curve_DTO.errorCode == 5
    assert not (tmp_path / "phi.csv").exists()
