from ._kakutani import *  # noqa: F401,F403
