__project__ = "omnileib"
__version__ = "0.1.0"
__author__ = "Philip Orange"
__email__ = "git@philiporange.com"
__url__ = "https://github.com/philiporange/omnileib"
__description__ = "Exact computations with Leibniz algebras, omni-representations and their cohomology."
__license__ = "CC0-1.0"
