# Test package for omnileib
