import os
import aiofiles
import logging

from src.config import settings
from src.core.complex import PolyhedralComplex
from src.core.errors import InputError
from .schema import ComplexDocument, complex_from_document, dumps, parse_document

logger = logging.getLogger(__name__)


class FileProcessor:
    """Reads and writes complex, triangulation and report files."""

    @staticmethod
    async def read_text(file_path: str) -> str:
        """Read a whole UTF-8 file."""
        if not os.path.exists(file_path):
            raise InputError(f"File not found: {file_path}")
        try:
            async with aiofiles.open(file_path, 'r', encoding='utf-8') as file:
                return await file.read()
        except UnicodeDecodeError as e:
            raise InputError(f"File is not valid UTF-8: {file_path} ({e})")

    @staticmethod
    async def load_document(file_path: str) -> ComplexDocument:
        """Parse a "vtc-1" file into its validated document model."""
        file_extension = os.path.splitext(file_path)[1].lower()
        if file_extension not in settings.SUPPORTED_FORMATS:
            raise InputError(f"Unsupported file format: {file_extension}")
        if not FileProcessor.validate_file(file_path, settings.MAX_FILE_SIZE):
            raise InputError(f"File missing or larger than {settings.MAX_FILE_SIZE} bytes: {file_path}")

        text = await FileProcessor.read_text(file_path)
        document = parse_document(text)
        logger.info(f"Loaded {file_path}: {len(document.polyhedra)} polyhedra, {len(document.pairings)} pairings")
        return document

    @staticmethod
    async def load_complex(file_path: str) -> PolyhedralComplex:
        return complex_from_document(await FileProcessor.load_document(file_path))

    @staticmethod
    async def load_triangulation(file_path: str):
        """Load a triangulation file written by `pull` or `virtualize`."""
        from src.pulling.triangulation import Triangulation

        return Triangulation.from_document(await FileProcessor.load_document(file_path))

    @staticmethod
    async def save_text(text: str, file_path: str) -> str:
        """Write text to ``file_path``, creating parent folders, and return the path."""
        parent = os.path.dirname(file_path)
        if parent:
            os.makedirs(parent, exist_ok=True)

        async with aiofiles.open(file_path, 'w', encoding='utf-8') as file:
            await file.write(text)

        logger.info(f"Wrote {len(text)} characters to {file_path}")
        return file_path

    @staticmethod
    async def save_document(document: dict, file_path: str) -> str:
        return await FileProcessor.save_text(dumps(document), file_path)

    @staticmethod
    async def read_ordering(file_path: str) -> list:
        """Read a vertex-class ordering: whitespace or comma separated class ids."""
        text = await FileProcessor.read_text(file_path)
        tokens = text.replace(",", " ").split()
        try:
            return [int(token) for token in tokens]
        except ValueError:
            raise InputError(f"Ordering file {file_path} must contain integers only")

    @staticmethod
    def validate_file(file_path: str, max_size: int) -> bool:
        """Validate file existence and size."""
        if not os.path.exists(file_path):
            return False

        file_size = os.path.getsize(file_path)
        return file_size <= max_size
