from .experiments_ns import experiments_ns, keys_ns
from .files_ns import exit_ns, files_ns
from .lattice_ns import lattice_ns
