"""Report file output.

Writes are atomic: content goes to a temp file in the destination directory
and is renamed into place, so a failed write never leaves a partial report.
"""

import logging
import os
import tempfile
from pathlib import Path

from attnet.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def write_report(content: str, output_path: str | Path, force: bool = False) -> Path:
    """Write ``content`` to ``output_path`` atomically.

    Args:
        content: Rendered report text
        output_path: Destination file path
        force: Replace an existing file instead of refusing

    Returns:
        The path written

    Raises:
        InvalidInputError: If the file exists and ``force`` is False
        OSError: On write failures (permissions, missing directory, disk full)
    """
    output_path = Path(output_path)

    if output_path.exists() and not force:
        logger.error("Output file already exists: %s", output_path)
        raise InvalidInputError(
            f"Output file already exists: {output_path} (use --force to overwrite)",
            field="out",
            value=str(output_path),
        )

    temp_path = None
    try:
        # Same directory as the target so the rename stays on one filesystem
        temp_fd, temp_name = tempfile.mkstemp(dir=output_path.parent, prefix=".attnet_", suffix=".tmp")
        temp_path = Path(temp_name)
        with open(temp_fd, "w", encoding="utf-8", newline="") as f:
            f.write(content)
        os.replace(temp_path, output_path)
    except OSError as e:
        logger.error("OSError writing to %s: %s (errno: %s)", output_path, e, e.errno)
        if temp_path and temp_path.exists():
            temp_path.unlink()
        raise

    logger.debug("Wrote %d characters to %s", len(content), output_path)
    return output_path
