from .checks import check_in_box, check_ordered, check_shape
from .paths import PATH, create_directory
