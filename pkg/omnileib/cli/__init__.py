# CLI sub-package for omnileib
