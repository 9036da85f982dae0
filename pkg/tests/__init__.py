# Test package of texmine, run with `python -m unittest discover`.
