import os
import logging
from typing import Optional, Union

from algebra import __version__
from algebra.basis import AlgebraError, GradedBasis, basis_from_json, basis_to_json, compute_basis
from algebra.preprojective import PreprojectiveAlgebra
from config.config_manager import get_config
from quiver.dynkin import DynkinQuiver, parse_selector
from quiver.root_data import RootData, root_data
from utils.file_utils import DirectoryManager, FileOperationError, load_json, save_json

logger = logging.getLogger(__name__)


class BasisCache:
    """
    JSON cache of graded bases, one file per quiver and code version.

    Partial bases (``--max-degree``) are never written.
    """

    def __init__(self, cache_dir: Optional[str] = None, enabled: Optional[bool] = None,
                 version: Optional[str] = None):
        config = get_config()
        self.cache_dir = cache_dir or config.get("cache", "dir", default=DirectoryManager.CACHE_DIR)
        self.enabled = config.get("cache", "enabled", default=True) if enabled is None else enabled
        self.version = version or __version__

    def path_for(self, quiver: DynkinQuiver) -> str:
        return DirectoryManager.get_cache_path(f"basis-{quiver.selector}-v{self.version}.json", self.cache_dir)

    def load(self, quiver: DynkinQuiver, data: RootData) -> Optional[GradedBasis]:
        """
        Read a cached basis.

        Returns:
            The basis, or None when caching is off or the blob is missing or unusable
        """
        if not self.enabled:
            return None
        path = os.path.join(self.cache_dir, f"basis-{quiver.selector}-v{self.version}.json")
        if not os.path.exists(path):
            return None
        try:
            payload = load_json(path)
            basis = basis_from_json(payload, quiver, data)
        except (FileOperationError, AlgebraError) as e:
            logger.warning(f"Ignoring cache {path}: {str(e)}")
            return None
        logger.info(f"Loaded {quiver.name} basis from {path}")
        return basis

    def store(self, basis: GradedBasis) -> Optional[str]:
        if not self.enabled or not basis.complete:
            return None
        path = self.path_for(basis.quiver)
        try:
            save_json(basis_to_json(basis), path)
        except FileOperationError as e:
            logger.warning(f"Could not write basis cache: {str(e)}")
            return None
        logger.info(f"Cached {basis.quiver.name} basis at {path}")
        return path


def load_basis(quiver: DynkinQuiver, max_degree: Optional[int] = None,
               cache: Optional[BasisCache] = None) -> GradedBasis:
    """
    Cached basis when available, otherwise computed (and cached).

    Args:
        quiver: The quiver
        max_degree: Partial run bound; None for the full algebra
        cache: Cache to use (default BasisCache() from config)

    Returns:
        The graded basis
    """
    data = root_data(quiver)
    cache = cache or BasisCache()
    if max_degree is None or max_degree >= data.top_degree:
        basis = cache.load(quiver, data)
        if basis is not None and basis.complete:
            return basis
    basis = compute_basis(quiver, data, max_degree)
    cache.store(basis)
    return basis


def load_algebra(quiver: Union[str, DynkinQuiver], max_degree: Optional[int] = None,
                 cache: Optional[BasisCache] = None) -> PreprojectiveAlgebra:
    """
    Build (or load) the preprojective algebra of a quiver.

    Args:
        quiver: Selector such as "e6" or a DynkinQuiver
        max_degree: Partial run bound
        cache: Optional cache

    Returns:
        The algebra
    """
    if isinstance(quiver, str):
        quiver = parse_selector(quiver)
    return PreprojectiveAlgebra(load_basis(quiver, max_degree, cache))
