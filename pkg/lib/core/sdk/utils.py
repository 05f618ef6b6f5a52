from pathlib import Path
from types import ModuleType
from typing import List


def get_all_modules(package: ModuleType, relative_package_dir: Path) -> List[str]:
    """
    Lists the modules of a package directory, sorted so that discovery order is stable across filesystems.
    """
    modules = []
    for path in sorted(Path(relative_package_dir).glob("*.py")):
        if not path.name.startswith("__"):
            modules.append(f"{package.__name__}.{path.stem}")
    return modules
