from .config import *
from .scalars import *
from .symcomb import *
from .linalg import *
from .hecke import *
from .quadratic import *
from .heckesym import *
from .harness import *
