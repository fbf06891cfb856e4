"""Computer-assisted verification toolkit for the coefficients of
G(q) = 1/(q, -q^3; q^4)_inf."""

__version__ = "0.1.0"
