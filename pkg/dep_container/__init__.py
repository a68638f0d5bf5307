from .commons import *