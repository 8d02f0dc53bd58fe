import os

DEBUG = bool(int(os.environ.get('DEBUG', 0)))
PROGRESS = bool(int(os.environ.get('PROGRESS', 0)))
