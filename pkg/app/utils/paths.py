import os
from pathlib import Path

PATH = Path | str


def create_directory(path: PATH) -> None:
    """
    Creates directory if it doesn't already exist

    Parameters:
        path : Path | str
            path to the file or directory, paths with a suffix are
            treated as files and their parent directory is created
    """
    path = Path(path)

    if path.exists():
        return
    # a path with a suffix points to a file, make sure its folder exists
    target = path.parent if path.suffix else path
    os.makedirs(target, exist_ok=True)
