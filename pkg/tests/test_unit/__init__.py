# Unit tests for omnileib
