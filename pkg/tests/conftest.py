# keeps the tests directory on sys.path so the _brute helpers import cleanly
